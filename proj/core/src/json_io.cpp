#include "hatg/json_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hatg/errors.hpp"
#include "hatg/numeric.hpp"

namespace hatg::json {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what, const std::exception& e) {
    throw InvalidInputError("malformed " + what + ": " + e.what());
}

json shape_to_json(const GraphShape& shape) {
    if (const auto* p = std::get_if<PlanarConstructionShape>(&shape)) {
        return {{"kind", "planar-construction"}, {"q", p->q}, {"m", p->m}};
    }
    if (const auto* b = std::get_if<BookShape>(&shape)) {
        return {{"kind", "book"}, {"d", b->d}, {"m", b->m}};
    }
    const auto& mp = std::get<MultipartiteShape>(shape);
    return {{"kind", "multipartite"}, {"n", mp.n}, {"m", mp.m}};
}

GraphShape shape_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "planar-construction") {
        return PlanarConstructionShape{j.at("q").get<int>(), j.at("m").get<int>()};
    }
    if (kind == "book") {
        return BookShape{j.at("d").get<int>(), j.at("m").get<int>()};
    }
    if (kind == "multipartite") {
        return MultipartiteShape{j.at("n").get<int>(), j.at("m").get<int>()};
    }
    throw InvalidInputError("unknown graph shape kind '" + kind + "'");
}

planar::PairFunction pair_function_from_json(int q, const json& table) {
    std::vector<int> digits;
    digits.reserve(table.size());
    for (const auto& entry : table) {
        if (!entry.is_array() || entry.size() != 2) {
            throw InvalidInputError("pair function entries must be [g1, g2]");
        }
        const int g1 = entry.at(0).get<int>();
        const int g2 = entry.at(1).get<int>();
        if (g1 < 0 || g2 <= g1 || g2 >= q) {
            throw InvalidInputError("pair function entry must satisfy 0 <= g1 < g2 < q");
        }
        digits.push_back(planar::colex_index(g1, g2));
    }
    return planar::function_from_digits(q, digits);
}

json guesser_to_json(const Guesser& guesser) {
    if (const auto* t = std::get_if<TableGuesser>(&guesser)) {
        return {{"type", "table"}, {"guesses", t->guesses}};
    }
    if (const auto* a = std::get_if<AffineGuesser>(&guesser)) {
        return {{"type", "affine"}, {"coeffs", a->coeffs}, {"bias", a->bias}};
    }
    const auto& s = std::get<StructuredGuesser>(guesser);
    return {{"type", "structured"}, {"meta", s.meta}};
}

Guesser structured_from_meta(const json& meta) {
    const auto role = meta.at("role").get<std::string>();
    if (role == "seeded-random") {
        return make_seeded_random_guesser(meta.at("q").get<int>(),
                                          meta.at("vertex").get<int>(),
                                          meta.at("seed").get<std::uint64_t>());
    }
    if (role == "planar-outer") {
        const int q = meta.at("q").get<int>();
        const auto which = meta.at("which").get<std::string>();
        if (which != "x" && which != "y") {
            throw InvalidInputError("planar outer guesser 'which' must be x or y");
        }
        return planar::make_outer_guesser(q, meta.at("pair_index").get<int>(),
                                          which == "y",
                                          pair_function_from_json(q, meta.at("table")));
    }
    if (role == "planar-central") {
        const int q = meta.at("q").get<int>();
        auto members = std::make_shared<std::vector<planar::PairFunction>>();
        for (const auto& table : meta.at("members")) {
            members->push_back(pair_function_from_json(q, table));
        }
        return planar::make_central_guesser(q, meta.at("which").get<int>(), members);
    }
    if (role == "book-central") {
        book::BookParameters params;
        params.d = meta.at("d").get<int>();
        params.q = meta.at("q").get<int>();
        params.m = meta.at("m").get<std::uint64_t>();
        params.s = meta.at("s").get<std::uint64_t>();
        auto members = std::make_shared<std::vector<std::vector<int>>>();
        for (const auto& table : meta.at("members")) {
            members->push_back(table.get<std::vector<int>>());
        }
        if (members->size() != params.m) {
            throw InvalidInputError("book central guesser member count differs from m");
        }
        return book::make_book_central_guesser(
            meta.at("which").get<int>(), params,
            std::shared_ptr<const std::vector<std::vector<int>>>(std::move(members)));
    }
    throw InvalidInputError("unknown structured guesser role '" + role + "'");
}

} // namespace

json to_json(const Graph& graph) {
    json edges = json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    json j = {{"n", graph.vertex_count()}, {"edges", std::move(edges)}};
    if (graph.shape()) j["shape"] = shape_to_json(*graph.shape());
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InvalidInputError("edges must be [u, v] pairs");
            }
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        std::optional<GraphShape> shape;
        if (j.contains("shape")) shape = shape_from_json(j.at("shape"));
        return Graph(n, std::move(edges), shape);
    } catch (const json::exception& e) {
        malformed("graph", e);
    }
}

json to_json(const Coloring& coloring) {
    return {{"q", coloring.q}, {"values", coloring.values}};
}

Coloring coloring_from_json(const json& j) {
    try {
        return Coloring(j.at("q").get<int>(), j.at("values").get<std::vector<int>>());
    } catch (const json::exception& e) {
        malformed("coloring", e);
    }
}

json to_json(const StrategyProfile& profile) {
    json guessers = json::array();
    for (const auto& g : profile.guessers()) guessers.push_back(guesser_to_json(g));
    return {{"q", profile.q()}, {"guessers", std::move(guessers)}};
}

StrategyProfile profile_from_json(const json& j) {
    try {
        const int q = j.at("q").get<int>();
        std::vector<Guesser> guessers;
        for (const auto& g : j.at("guessers")) {
            const auto type = g.at("type").get<std::string>();
            if (type == "table") {
                guessers.emplace_back(TableGuesser{g.at("guesses").get<std::vector<int>>()});
            } else if (type == "affine") {
                guessers.emplace_back(AffineGuesser{g.at("coeffs").get<std::vector<int>>(),
                                                    g.at("bias").get<int>()});
            } else if (type == "structured") {
                guessers.emplace_back(structured_from_meta(g.at("meta")));
            } else {
                throw InvalidInputError("unknown guesser type '" + type + "'");
            }
        }
        return StrategyProfile(q, std::move(guessers));
    } catch (const json::exception& e) {
        malformed("strategy profile", e);
    }
}

json to_json(const KnownSet& set) {
    return {{"d", set.d}, {"q", set.q}, {"set", set.set}};
}

KnownSet known_set_from_json(const json& j) {
    try {
        return KnownSet(j.at("d").get<int>(), j.at("q").get<int>(),
                        j.at("set").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        malformed("known set", e);
    }
}

json to_json(const linear::LinearStrategy& strategy) {
    json vertices = json::array();
    for (int v = 0; v < strategy.vertex_count(); ++v) {
        vertices.push_back({{"coeffs", strategy.coeffs[static_cast<std::size_t>(v)]},
                            {"bias", strategy.bias[static_cast<std::size_t>(v)]}});
    }
    return {{"n", strategy.n}, {"m", strategy.m}, {"p", strategy.p},
            {"vertices", std::move(vertices)}};
}

linear::LinearStrategy linear_from_json(const json& j) {
    try {
        std::vector<std::vector<int>> coeffs;
        std::vector<int> bias;
        for (const auto& v : j.at("vertices")) {
            coeffs.push_back(v.at("coeffs").get<std::vector<int>>());
            bias.push_back(v.at("bias").get<int>());
        }
        return linear::LinearStrategy(j.at("n").get<int>(), j.at("m").get<int>(),
                                      j.at("p").get<int>(), std::move(coeffs),
                                      std::move(bias));
    } catch (const json::exception& e) {
        malformed("linear strategy", e);
    }
}

json to_json(const linear::SpreadFamily& family) {
    json j = {{"n", family.ground.n},
              {"m", family.ground.m},
              {"p", family.ground.p},
              {"r", family.ground.r}};
    if (const auto* imp = std::get_if<linear::ImplicitFamily>(&family.rep)) {
        j["kind"] = imp->kind == linear::FamilyKind::F ? "F" : "G";
        j["strategy"] = to_json(imp->strategy);
    } else {
        j["members"] = std::get<linear::MaterializedFamily>(family.rep).members;
    }
    return j;
}

linear::SpreadFamily spread_family_from_json(const json& j) {
    try {
        linear::GroundSet ground{j.at("n").get<int>(), j.at("m").get<int>(),
                                 j.at("p").get<int>(),
                                 j.value("r", 2.0)};
        if (ground.n < 1 || ground.m < 1 || ground.p < 1) {
            throw InvalidInputError("ground set needs n, m, p >= 1");
        }
        if (j.contains("strategy")) {
            const auto kind = j.at("kind").get<std::string>();
            if (kind != "F" && kind != "G") {
                throw InvalidInputError("family kind must be F or G");
            }
            linear::LinearStrategy strategy = linear_from_json(j.at("strategy"));
            if (strategy.n != ground.n || strategy.m != ground.m ||
                strategy.p != ground.p) {
                throw InvalidInputError("family ground set differs from its strategy");
            }
            linear::SpreadFamily family = linear::implicit_family(
                kind == "F" ? linear::FamilyKind::F : linear::FamilyKind::G,
                std::move(strategy));
            family.ground.r = ground.r;
            return family;
        }
        linear::MaterializedFamily mat;
        mat.members = j.at("members").get<std::vector<std::vector<int>>>();
        const auto w = static_cast<std::size_t>(ground.w());
        for (const auto& member : mat.members) {
            if (member.size() != w) {
                throw InvalidInputError("family member must pick one element per slot");
            }
            for (const int e : member) {
                if (e < 0 || static_cast<std::uint64_t>(e) >= ground.size()) {
                    throw InvalidInputError("family member element outside the ground set");
                }
            }
        }
        linear::SpreadFamily family;
        family.ground = ground;
        family.rep = std::move(mat);
        return family;
    } catch (const json::exception& e) {
        malformed("spread family", e);
    }
}

json to_json(const book::OntoFamily& family) {
    return {{"d", family.params.d},
            {"q", family.params.q},
            {"m", family.params.m},
            {"s", family.params.s},
            {"members", family.members}};
}

book::OntoFamily onto_family_from_json(const json& j) {
    try {
        book::OntoFamily family;
        family.params.d = j.at("d").get<int>();
        family.params.q = j.at("q").get<int>();
        family.params.m = j.at("m").get<std::uint64_t>();
        family.params.s = j.at("s").get<std::uint64_t>();
        family.members = j.at("members").get<std::vector<std::vector<int>>>();
        if (family.members.size() != family.params.m) {
            throw InvalidInputError("family member count differs from m");
        }
        const auto domain = checked_pow_u64(static_cast<std::uint64_t>(family.params.q),
                                            static_cast<std::uint64_t>(family.params.d));
        for (const auto& member : family.members) {
            if (!domain || member.size() != *domain) {
                throw InvalidInputError("family member table has the wrong size");
            }
            for (const int c : member) {
                if (c < 0 || c >= family.params.q) {
                    throw InvalidInputError("family member color out of range");
                }
            }
        }
        return family;
    } catch (const json::exception& e) {
        malformed("onto family", e);
    }
}

json to_json(const planar::PairFunctionFamily& family) {
    json members = json::array();
    for (const auto& member : family.members) {
        json table = json::array();
        for (const auto& [g1, g2] : member.table) table.push_back({g1, g2});
        members.push_back(std::move(table));
    }
    return {{"q", family.q}, {"t", family.t}, {"members", std::move(members)}};
}

planar::PairFunctionFamily pair_family_from_json(const json& j) {
    try {
        planar::PairFunctionFamily family;
        family.q = j.at("q").get<int>();
        family.t = j.at("t").get<int>();
        for (const auto& table : j.at("members")) {
            family.members.push_back(pair_function_from_json(family.q, table));
        }
        return family;
    } catch (const json::exception& e) {
        malformed("pair function family", e);
    }
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInputError(e.what()); // carries the byte position
    }
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw InvalidInputError("in '" + path + "': " + e.what());
    }
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write '" + path + "'");
    out << dump_report(j);
}

} // namespace hatg::json
