#include "hatg/clique_handler.hpp"

#include <algorithm>
#include <utility>

#include "hatg/errors.hpp"
#include "hatg/strategy.hpp"

namespace hatg {

KnownSet::KnownSet(int d_, int q_, std::vector<std::vector<int>> set_)
    : d(d_), q(q_), set(std::move(set_)) {
    if (d < 1 || q < 1) throw InvalidInputError("known set needs d >= 1, q >= 1");
    for (const auto& s : set) {
        if (static_cast<int>(s.size()) != d) {
            throw InvalidInputError("known-set member length differs from d");
        }
        for (const int c : s) {
            if (c < 0 || c >= q) throw InvalidInputError("known-set color out of range");
        }
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
        throw InvalidInputError("known-set members must be distinct");
    }
}

BigUint capacity(int d) {
    if (d < 1) throw InvalidInputError("capacity needs d >= 1");
    BigUint total(0);
    for (int i = 1; i <= d; ++i) {
        total = total + BigUint::pow(static_cast<std::uint64_t>(i), static_cast<unsigned>(i));
    }
    return total;
}

int CliqueStrategy::guess(int v, const std::vector<int>& others) const {
    const auto& table = tables.at(static_cast<std::size_t>(v));
    const auto it = table.find(others);
    return it == table.end() ? 0 : it->second;
}

namespace {

std::vector<int> project(const std::vector<int>& member, int v) {
    std::vector<int> out;
    out.reserve(member.size() - 1);
    for (std::size_t j = 0; j < member.size(); ++j) {
        if (static_cast<int>(j) != v) out.push_back(member[j]);
    }
    return out;
}

struct Slot {
    int vertex;
    std::vector<int> observed;
    std::vector<int> candidates; // ascending colors, then kAbstain
};

struct MemberState {
    std::vector<std::pair<std::uint32_t, int>> slots; // (slot id, own color)
    int pending = 0;
    int covered = 0;
};

class Searcher {
  public:
    Searcher(const KnownSet& ks, std::uint64_t budget) : ks_(ks), budget_(budget) {
        // One slot per (vertex, distinct projection of the set).
        std::map<std::pair<int, std::vector<int>>, std::uint32_t> ids;
        members_.resize(ks.set.size());
        for (int v = 0; v < ks.d; ++v) {
            for (std::size_t idx = 0; idx < ks.set.size(); ++idx) {
                auto key = std::make_pair(v, project(ks.set[idx], v));
                auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(slots_.size()));
                if (fresh) slots_.push_back(Slot{v, key.second, {}});
                const std::uint32_t sid = it->second;
                const int own = ks.set[idx][static_cast<std::size_t>(v)];
                slots_[sid].candidates.push_back(own);
                members_[idx].slots.emplace_back(sid, own);
                slot_members_.resize(slots_.size());
                slot_members_[sid].emplace_back(static_cast<std::uint32_t>(idx), own);
            }
        }
        // The map iterates keys in (vertex, observation) lexicographic order
        // already, but slots_ was appended in set order; re-sort.
        reorder();
        for (auto& slot : slots_) {
            std::sort(slot.candidates.begin(), slot.candidates.end());
            slot.candidates.erase(std::unique(slot.candidates.begin(), slot.candidates.end()),
                                  slot.candidates.end());
            slot.candidates.push_back(kAbstain);
        }
        for (auto& m : members_) m.pending = ks.d;
        assignment_.assign(slots_.size(), kUnset);
    }

    HandleOutcome run() {
        BigUint space(1);
        for (const auto& slot : slots_) {
            space = space * BigUint(static_cast<std::uint64_t>(slot.candidates.size()));
        }
        HandleOutcome outcome;
        if (dfs(0)) {
            CliqueStrategy strategy;
            strategy.d = ks_.d;
            strategy.q = ks_.q;
            strategy.tables.resize(static_cast<std::size_t>(ks_.d));
            for (std::size_t s = 0; s < slots_.size(); ++s) {
                strategy.tables[static_cast<std::size_t>(slots_[s].vertex)]
                    .emplace(slots_[s].observed, assignment_[s] == kUnset ? 0 : assignment_[s]);
            }
            outcome.strategy = std::move(strategy);
        } else {
            outcome.certificate = InfeasibleCertificate{nodes_, space.to_string()};
        }
        outcome.nodes = nodes_;
        return outcome;
    }

  private:
    static constexpr int kUnset = -2;

    void reorder() {
        std::vector<std::uint32_t> order(slots_.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (slots_[a].vertex != slots_[b].vertex) return slots_[a].vertex < slots_[b].vertex;
            return slots_[a].observed < slots_[b].observed;
        });
        std::vector<std::uint32_t> rank(slots_.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
        std::vector<Slot> slots(slots_.size());
        std::vector<std::vector<std::pair<std::uint32_t, int>>> slot_members(slots_.size());
        for (std::uint32_t old = 0; old < slots_.size(); ++old) {
            slots[rank[old]] = std::move(slots_[old]);
            slot_members[rank[old]] = std::move(slot_members_[old]);
        }
        slots_ = std::move(slots);
        slot_members_ = std::move(slot_members);
        for (auto& m : members_) {
            for (auto& [sid, own] : m.slots) sid = rank[sid];
        }
    }

    bool assign(std::uint32_t slot, int value, std::vector<std::uint32_t>& trail) {
        if (assignment_[slot] != kUnset) return assignment_[slot] == value;
        if (++nodes_ > budget_) {
            throw BudgetError("known-set search node budget exhausted",
                              std::to_string(budget_));
        }
        assignment_[slot] = value;
        trail.push_back(slot);
        // The loop must run to completion even after a contradiction:
        // rollback undoes every member of the slot, so every member's
        // counters have to be updated here.
        bool ok = true;
        for (const auto& [midx, own] : slot_members_[slot]) {
            MemberState& m = members_[midx];
            --m.pending;
            if (own == value) ++m.covered;
            if (m.covered > 0) continue;
            if (m.pending == 0) ok = false;
            if (m.pending == 1) units_.push_back(midx);
        }
        return ok;
    }

    bool propagate(std::vector<std::uint32_t>& trail) {
        while (!units_.empty()) {
            const std::uint32_t midx = units_.back();
            units_.pop_back();
            MemberState& m = members_[midx];
            if (m.covered > 0 || m.pending != 1) continue;
            for (const auto& [sid, own] : m.slots) {
                if (assignment_[sid] == kUnset) {
                    if (!assign(sid, own, trail)) return false;
                    break;
                }
            }
        }
        return true;
    }

    void rollback(std::vector<std::uint32_t>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            const std::uint32_t slot = *it;
            const int value = assignment_[slot];
            for (const auto& [midx, own] : slot_members_[slot]) {
                MemberState& m = members_[midx];
                ++m.pending;
                if (own == value) --m.covered;
            }
            assignment_[slot] = kUnset;
        }
        trail.clear();
        units_.clear();
    }

    bool dfs(std::uint32_t from) {
        std::uint32_t slot = from;
        while (slot < slots_.size() && assignment_[slot] != kUnset) ++slot;
        if (slot == slots_.size()) return covered_all();
        for (const int value : slots_[slot].candidates) {
            std::vector<std::uint32_t> trail;
            if (assign(slot, value, trail) && propagate(trail)) {
                if (dfs(slot + 1)) return true;
            }
            rollback(trail);
        }
        return false;
    }

    bool covered_all() const {
        for (const auto& m : members_) {
            if (m.covered == 0) return false;
        }
        return true;
    }

    const KnownSet& ks_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Slot> slots_;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> slot_members_;
    std::vector<MemberState> members_;
    std::vector<int> assignment_;
    std::vector<std::uint32_t> units_;
};

} // namespace

HandleOutcome handle_known_set(const KnownSet& ks, std::uint64_t budget) {
    if (ks.set.empty()) {
        HandleOutcome outcome;
        CliqueStrategy strategy;
        strategy.d = ks.d;
        strategy.q = ks.q;
        strategy.tables.resize(static_cast<std::size_t>(ks.d));
        outcome.strategy = std::move(strategy);
        return outcome;
    }
    Searcher searcher(ks, budget);
    return searcher.run();
}

bool is_handleable(const KnownSet& ks, std::uint64_t budget) {
    return handle_known_set(ks, budget).feasible();
}

} // namespace hatg
