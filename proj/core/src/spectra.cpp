#include "cospectra/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cospectra {

std::string CharPoly::to_string() const {
    std::ostringstream out;
    const int n = degree();
    bool first = true;
    for (int k = 0; k <= n; ++k) {
        const Int& c = coeffs[k];
        if (c == 0 && !(n == 0 && k == 0)) continue;
        const int deg = n - k;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (deg == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << 'x';
            if (deg > 1) out << '^' << deg;
        }
    }
    if (first) out << '0';
    return out.str();
}

CharPoly char_poly(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const int n = a.rows();
    std::vector<Int> c{1};
    std::vector<Int> t, v, nv, nc;
    for (int r = 0; r < n; ++r) {
        t.assign(r + 2, 0);
        t[0] = 1;
        t[1] = -a.at(r, r);
        v.resize(r);
        for (int i = 0; i < r; ++i) v[i] = a.at(i, r);
        for (int j = 2; j <= r + 1; ++j) {
            Int dot = 0;
            for (int i = 0; i < r; ++i) dot += a.at(r, i) * v[i];
            t[j] = -dot;
            if (j <= r) {
                nv.assign(r, 0);
                for (int i = 0; i < r; ++i) {
                    if (v[i] == 0) continue;
                    for (int i2 = 0; i2 < r; ++i2)
                        if (a.at(i2, i) != 0) nv[i2] += a.at(i2, i) * v[i];
                }
                v.swap(nv);
            }
        }
        nc.assign(r + 2, 0);
        for (int i = 0; i <= r + 1; ++i)
            for (int j = 0; j <= i && j <= r + 1; ++j)
                if (i - j < static_cast<int>(c.size()) && t[j] != 0 && c[i - j] != 0) nc[i] += t[j] * c[i - j];
        c.swap(nc);
    }
    return CharPoly{std::move(c)};
}

CharPoly char_poly(const Graph& g) { return char_poly(g.adjacency_int()); }

bool cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw std::invalid_argument("cospectral: order mismatch");
    return char_poly(g) == char_poly(h);
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.edge(u, v)) c.set_edge(u, v, true);
    return c;
}

namespace {

// (degree, sorted neighbor degrees) per vertex.
std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> prof(n);
    for (int v = 0; v < n; ++v) {
        prof[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (int u = 0; u < n; ++u)
            if (g.edge(v, u)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        prof[v].insert(prof[v].end(), nd.begin(), nd.end());
    }
    return prof;
}

bool extend(const Graph& g, const Graph& h, const std::vector<int>& order,
            const std::vector<std::vector<int>>& pg, const std::vector<std::vector<int>>& ph,
            size_t depth, std::vector<int>& map, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
        if (used[w] || pg[v] != ph[w]) continue;
        bool fits = true;
        for (size_t d = 0; d < depth && fits; ++d) {
            const int u = order[d];
            if (g.edge(v, u) != h.edge(map[u], w)) fits = false;
        }
        if (!fits) continue;
        map[v] = w;
        used[w] = true;
        if (extend(g, h, order, pg, ph, depth + 1, map, used)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

IsoCertificate isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > 32 || h.order() > 32) throw std::invalid_argument("isomorphism search capped at order 32");
    IsoCertificate out;
    if (g.order() != h.order()) {
        out.witness = "orders differ";
        return out;
    }
    if (g.edge_count() != h.edge_count()) {
        out.witness = "edge counts differ";
        return out;
    }
    if (g.degree_sequence() != h.degree_sequence()) {
        out.witness = "degree sequences differ";
        return out;
    }
    auto pg = vertex_profiles(g), ph = vertex_profiles(h);
    {
        auto sg = pg, sh = ph;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) {
            out.witness = "neighbor degree profiles differ";
            return out;
        }
    }
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (extend(g, h, order, pg, ph, 0, map, used)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.edge(u, v) != h.edge(map[u], map[v])) throw std::logic_error("isomorphism witness failed verification");
        out.isomorphic = true;
        out.perm = std::move(map);
        return out;
    }
    out.witness = "search exhausted";
    return out;
}

}  // namespace cospectra
