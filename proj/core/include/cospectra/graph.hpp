#pragma once

// Labeled simple graphs stored as symmetric zero-diagonal (0,1)-matrices.

#include "exactmat.hpp"

#include <optional>
#include <vector>

namespace cospectra {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : a_(n, n) {}

    // Rejects non-square, non-symmetric, loopy, or non-(0,1) input.
    static std::optional<Graph> from_adjacency(const IntMatrix& a);
    static std::optional<Graph> from_adjacency(const ZeroOneMatrix& a);

    int order() const { return a_.rows(); }
    int edge_count() const;

    bool edge(int u, int v) const { return a_.get(u, v); }
    void set_edge(int u, int v, bool present);   // throws std::invalid_argument on a loop

    int degree(int v) const;
    std::vector<int> degree_sequence() const;    // ascending

    const ZeroOneMatrix& adjacency() const { return a_; }
    IntMatrix adjacency_int() const { return a_.to_int(); }

    bool operator==(const Graph& o) const = default;

private:
    ZeroOneMatrix a_;
};

}  // namespace cospectra
