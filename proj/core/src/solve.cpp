#include "hatg/solve.hpp"

#include <string>
#include <utility>
#include <vector>

#include "hatg/biguint.hpp"
#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"

namespace hatg {

namespace {

constexpr std::uint64_t kMaxColorings = 1u << 20;
constexpr std::uint64_t kMaxSlots = 1u << 20;

struct ColoringState {
    std::vector<std::pair<std::uint32_t, int>> slots; // (slot id, own color there)
    int pending = 0;   // slots not yet assigned
    int covered = 0;   // assigned slots that guess correctly
};

class Searcher {
  public:
    Searcher(const Graph& graph, int q, std::uint64_t budget)
        : graph_(graph), q_(q), budget_(budget) {
        const int n = graph.vertex_count();
        const auto total =
            checked_pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
        if (!total || *total > kMaxColorings || *total > budget) {
            throw BudgetError("solver needs q^n colorings in memory",
                              BigUint::pow(static_cast<std::uint64_t>(q),
                                           static_cast<unsigned>(n))
                                  .to_string());
        }
        offsets_.resize(static_cast<std::size_t>(n));
        std::uint64_t slot_count = 0;
        for (int v = 0; v < n; ++v) {
            offsets_[static_cast<std::size_t>(v)] = slot_count;
            const auto width = checked_pow_u64(static_cast<std::uint64_t>(q),
                                               static_cast<unsigned>(graph.degree(v)));
            if (!width || (slot_count += *width) > kMaxSlots) {
                throw BudgetError("solver table space too large",
                                  std::to_string(kMaxSlots));
            }
        }
        assignment_.assign(slot_count, -1);
        slot_members_.assign(slot_count, {});
        colorings_.resize(*total);

        std::vector<int> values(static_cast<std::size_t>(n), 0);
        std::vector<int> obs;
        for (std::uint64_t idx = 0; idx < *total; ++idx) {
            ColoringState& cs = colorings_[idx];
            for (int v = 0; v < n; ++v) {
                const auto& nb = graph.neighbors(v);
                obs.resize(nb.size());
                for (std::size_t j = 0; j < nb.size(); ++j) {
                    obs[j] = values[static_cast<std::size_t>(nb[j])];
                }
                const auto slot = static_cast<std::uint32_t>(
                    offsets_[static_cast<std::size_t>(v)] + observation_index(obs, q));
                const int own = values[static_cast<std::size_t>(v)];
                cs.slots.emplace_back(slot, own);
                slot_members_[slot].push_back(
                    {static_cast<std::uint32_t>(idx), own});
            }
            cs.pending = n;
            // lexicographic odometer
            for (std::size_t pos = values.size(); pos-- > 0;) {
                if (++values[pos] < q) break;
                values[pos] = 0;
            }
        }
    }

    SolveResult run() {
        const bool ok = dfs();
        SolveResult result{ok, std::nullopt, nodes_};
        if (ok) {
            std::vector<Guesser> guessers;
            const int n = graph_.vertex_count();
            for (int v = 0; v < n; ++v) {
                const std::uint64_t begin = offsets_[static_cast<std::size_t>(v)];
                const std::uint64_t end =
                    (v + 1 < n) ? offsets_[static_cast<std::size_t>(v) + 1]
                                : assignment_.size();
                TableGuesser table;
                table.guesses.reserve(end - begin);
                for (std::uint64_t s = begin; s < end; ++s) {
                    const int g = assignment_[s];
                    table.guesses.push_back(g < 0 ? 0 : g);
                }
                guessers.emplace_back(std::move(table));
            }
            result.witness = StrategyProfile(q_, std::move(guessers));
        }
        return result;
    }

  private:
    // Applies slot := value; returns false on contradiction.  Every touched
    // slot is recorded on the trail for rollback.
    bool assign(std::uint32_t slot, int value, std::vector<std::uint32_t>& trail) {
        if (assignment_[slot] >= 0) return assignment_[slot] == value;
        if (++nodes_ > budget_) {
            throw BudgetError("solver node budget exhausted", std::to_string(budget_));
        }
        assignment_[slot] = value;
        trail.push_back(slot);
        // The loop must run to completion even after a contradiction:
        // rollback undoes every member of the slot, so every member's
        // counters have to be updated here.
        bool ok = true;
        for (const auto& [cidx, own] : slot_members_[slot]) {
            ColoringState& cs = colorings_[cidx];
            --cs.pending;
            if (own == value) ++cs.covered;
            if (cs.covered > 0) continue;
            if (cs.pending == 0) ok = false;
            if (cs.pending == 1) units_.push_back(cidx);
        }
        return ok;
    }

    bool propagate(std::vector<std::uint32_t>& trail) {
        while (!units_.empty()) {
            const std::uint32_t cidx = units_.back();
            units_.pop_back();
            ColoringState& cs = colorings_[cidx];
            if (cs.covered > 0 || cs.pending != 1) continue;
            for (const auto& [slot, own] : cs.slots) {
                if (assignment_[slot] < 0) {
                    if (!assign(slot, own, trail)) return false;
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
            for (const auto& [cidx, own] : slot_members_[slot]) {
                ColoringState& cs = colorings_[cidx];
                ++cs.pending;
                if (own == value) --cs.covered;
            }
            assignment_[slot] = -1;
        }
        trail.clear();
        units_.clear();
    }

    // Next decision: the first unassigned slot of the first uncovered
    // coloring, so every branch works toward covering a concrete demand.
    long pick_slot() const {
        for (std::size_t c = 0; c < colorings_.size(); ++c) {
            const ColoringState& cs = colorings_[c];
            if (cs.covered > 0) continue;
            for (const auto& [slot, own] : cs.slots) {
                if (assignment_[slot] < 0) return static_cast<long>(slot);
            }
        }
        return -1;
    }

    bool dfs() {
        const long slot = pick_slot();
        if (slot < 0) return true; // every coloring covered
        for (int value = 0; value < q_; ++value) {
            std::vector<std::uint32_t> trail;
            if (assign(static_cast<std::uint32_t>(slot), value, trail) && propagate(trail)) {
                if (dfs()) return true;
            }
            rollback(trail);
        }
        return false;
    }

    const Graph& graph_;
    int q_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<int> assignment_;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> slot_members_;
    std::vector<ColoringState> colorings_;
    std::vector<std::uint32_t> units_;
};

} // namespace

SolveResult solve_hg(const Graph& graph, int q, std::uint64_t budget) {
    if (q < 1) throw InvalidInputError("solver needs q >= 1");
    Searcher searcher(graph, q, budget);
    return searcher.run();
}

} // namespace hatg
