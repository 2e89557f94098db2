#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace hatg {

/// Central pair u=0, v=1 plus m outer pairs (2+2i, 3+2i); every outer
/// vertex is adjacent to u, v and its partner. q records the intended
/// color count of the construction.
struct PlanarConstructionShape {
    int q = 0;
    int m = 0;
    bool operator==(const PlanarConstructionShape&) const = default;
};

/// Central clique 0..d-1 plus independent outer vertices d..d+m-1, each
/// adjacent to the whole clique.
struct BookShape {
    int d = 0;
    int m = 0;
    bool operator==(const BookShape&) const = default;
};

/// Complete multipartite graph with m parts of n vertices each; vertex
/// (i, k) has index i*m + k.
struct MultipartiteShape {
    int n = 0;
    int m = 0;
    bool operator==(const MultipartiteShape&) const = default;
};

using GraphShape = std::variant<PlanarConstructionShape, BookShape, MultipartiteShape>;

/// Undirected simple graph with ascending adjacency lists. Immutable after
/// construction. An attached shape tag is validated against the edge set.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::optional<GraphShape> shape = std::nullopt);

    static Graph empty_graph(int n);
    static Graph complete(int n);
    static Graph planar_construction(int q, int m);
    static Graph book(int d, int m);
    static Graph multipartite(int n, int m);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::optional<GraphShape>& shape() const { return shape_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_; // canonical: u < v, sorted
    std::vector<std::vector<int>> adj_;
    std::optional<GraphShape> shape_;
};

/// Hat assignment: one color in [0, q) per vertex.
struct Coloring {
    int q = 0;
    std::vector<int> values;

    Coloring() = default;
    Coloring(int q_, std::vector<int> values_);

    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const Coloring&) const = default;
};

} // namespace hatg
