#include "hatg/graph.hpp"

#include <algorithm>
#include <string>

#include "hatg/errors.hpp"

namespace hatg {

namespace {

std::vector<std::pair<int, int>> planar_construction_edges(int m) {
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < m; ++i) {
        const int x = 2 + 2 * i;
        const int y = 3 + 2 * i;
        edges.emplace_back(x, y);
        edges.emplace_back(0, x);
        edges.emplace_back(0, y);
        edges.emplace_back(1, x);
        edges.emplace_back(1, y);
    }
    return edges;
}

std::vector<std::pair<int, int>> book_edges(int d, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < d; ++u) {
        for (int v = u + 1; v < d; ++v) edges.emplace_back(u, v);
    }
    for (int i = 0; i < m; ++i) {
        for (int u = 0; u < d; ++u) edges.emplace_back(u, d + i);
    }
    return edges;
}

std::vector<std::pair<int, int>> multipartite_edges(int n, int m) {
    std::vector<std::pair<int, int>> edges;
    const int total = n * m;
    for (int u = 0; u < total; ++u) {
        for (int v = u + 1; v < total; ++v) {
            if (u % m != v % m) edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::vector<std::pair<int, int>> shape_edges(const GraphShape& shape) {
    if (const auto* p = std::get_if<PlanarConstructionShape>(&shape)) {
        return planar_construction_edges(p->m);
    }
    if (const auto* b = std::get_if<BookShape>(&shape)) {
        return book_edges(b->d, b->m);
    }
    const auto& mp = std::get<MultipartiteShape>(shape);
    return multipartite_edges(mp.n, mp.m);
}

int shape_vertex_count(const GraphShape& shape) {
    if (const auto* p = std::get_if<PlanarConstructionShape>(&shape)) return 2 + 2 * p->m;
    if (const auto* b = std::get_if<BookShape>(&shape)) return b->d + b->m;
    const auto& mp = std::get<MultipartiteShape>(shape);
    return mp.n * mp.m;
}

} // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::optional<GraphShape> shape)
    : n_(n), shape_(std::move(shape)) {
    if (n < 1) throw InvalidInputError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidInputError("edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvalidInputError("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    if (shape_) {
        if (shape_vertex_count(*shape_) != n) {
            throw InvalidInputError("shape tag vertex count does not match graph");
        }
        auto expected = shape_edges(*shape_);
        std::sort(expected.begin(), expected.end());
        if (expected != edges_) {
            throw InvalidInputError("shape tag does not match the edge set");
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw InvalidInputError("vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

Graph Graph::empty_graph(int n) { return Graph(n, {}); }

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph Graph::planar_construction(int q, int m) {
    if (m < 0) throw InvalidInputError("negative outer pair count");
    return Graph(2 + 2 * m, planar_construction_edges(m), PlanarConstructionShape{q, m});
}

Graph Graph::book(int d, int m) {
    if (d < 1 || m < 0) throw InvalidInputError("book needs d >= 1, m >= 0");
    return Graph(d + m, book_edges(d, m), BookShape{d, m});
}

Graph Graph::multipartite(int n, int m) {
    if (n < 1 || m < 1) throw InvalidInputError("multipartite needs n, m >= 1");
    return Graph(n * m, multipartite_edges(n, m), MultipartiteShape{n, m});
}

Coloring::Coloring(int q_, std::vector<int> values_) : q(q_), values(std::move(values_)) {
    if (q < 1) throw InvalidInputError("coloring needs q >= 1");
    for (const int c : values) {
        if (c < 0 || c >= q) throw InvalidInputError("color out of range");
    }
}

} // namespace hatg
