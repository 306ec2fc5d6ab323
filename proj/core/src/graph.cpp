#include "cospectra/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospectra {

std::optional<Graph> Graph::from_adjacency(const IntMatrix& a) {
    if (a.rows() != a.cols() || !a.is_zero_one() || !a.is_symmetric() || !a.is_zero_diagonal())
        return std::nullopt;
    Graph g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) == 1) g.a_.set(i, j, true);
    return g;
}

std::optional<Graph> Graph::from_adjacency(const ZeroOneMatrix& a) {
    return from_adjacency(a.to_int());
}

int Graph::edge_count() const {
    int e = 0;
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if (a_.get(i, j)) ++e;
    return e;
}

void Graph::set_edge(int u, int v, bool present) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    a_.set(u, v, present);
    a_.set(v, u, present);
}

int Graph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < order(); ++j)
        if (a_.get(v, j)) ++d;
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(order());
    for (int v = 0; v < order(); ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace cospectra
