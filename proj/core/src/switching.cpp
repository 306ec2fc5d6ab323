#include "cospectra/switching.hpp"

#include "cospectra/blockgrammar.hpp"

#include <stdexcept>

namespace cospectra {

Graph assemble_bordered(const BorderedGraph& bg) {
    const int k = bg.x.order();
    const int nb = bg.b.order();
    if (bg.c.rows() != k || bg.c.cols() != nb) throw std::invalid_argument("border block shape mismatch");
    Graph g(k + nb);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (bg.x.edge(u, v)) g.set_edge(u, v, true);
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < nb; ++v)
            if (bg.c.get(u, v)) g.set_edge(u, k + v, true);
    for (int u = 0; u < nb; ++u)
        for (int v = u + 1; v < nb; ++v)
            if (bg.b.edge(u, v)) g.set_edge(k + u, k + v, true);
    return g;
}

std::string column_class_name(ColumnClass c) {
    switch (c) {
        case ColumnClass::Mixed: return "mixed";
        case ColumnClass::Aligned: return "aligned";
        case ColumnClass::Grouped: return "grouped";
        case ColumnClass::Inadmissible: return "inadmissible";
    }
    return "?";
}

ColumnCheck column_admissible(const RationalOrthogonal& q, const std::vector<int>& col) {
    const int k = q.order();
    if (static_cast<int>(col.size()) != k) throw std::invalid_argument("column length mismatch");
    ColumnCheck out;
    std::vector<Int> img(k, 0);
    for (int i = 0; i < k; ++i) {
        Int v = 0;
        for (int r = 0; r < k; ++r)
            if (col[r]) v += q.q.num.at(r, i);
        img[i] = v;
    }
    for (int i = 0; i < k; ++i) {
        if (img[i] != 0 && img[i] != q.q.den) {
            out.index = i;
            out.num = img[i];
            out.den = q.q.den;
            return out;
        }
    }
    out.ok = true;
    out.image.resize(k);
    for (int i = 0; i < k; ++i) out.image[i] = img[i] == 0 ? 0 : 1;
    return out;
}

ColumnClass classify_column(int level, int m, const std::vector<int>& col) {
    if (level != 2 && level != 3) throw std::invalid_argument("level must be 2 or 3");
    if (static_cast<int>(col.size()) != level * m) throw std::invalid_argument("column length mismatch");
    if (level == 2) {
        bool all_one = true, all_even = true;
        for (int i = 0; i < m; ++i) {
            const int s = col[2 * i] + col[2 * i + 1];
            if (s != 1) all_one = false;
            if (s == 1) all_even = false;
        }
        if (all_one) return ColumnClass::Mixed;
        if (all_even) return ColumnClass::Aligned;
        return ColumnClass::Inadmissible;
    }
    for (int i = 0; i < m; ++i) {
        const int s = col[3 * i] + col[3 * i + 1] + col[3 * i + 2];
        if (s != 0 && s != 3) return ColumnClass::Inadmissible;
    }
    return ColumnClass::Grouped;
}

std::vector<int> switch_border(int level, int m, const std::vector<int>& col, ColumnClass cls) {
    if (static_cast<int>(col.size()) != level * m) throw std::invalid_argument("column length mismatch");
    std::vector<int> out(col.size(), 0);
    switch (cls) {
        case ColumnClass::Mixed: {
            if (level != 2) throw std::invalid_argument("mixed columns exist at level 2 only");
            for (int i = 0; i < m; ++i) {
                out[2 * i] = col[2 * i + 1];
                out[2 * i + 1] = col[2 * i];
            }
            return out;
        }
        case ColumnClass::Aligned:
        case ColumnClass::Grouped: {
            if ((cls == ColumnClass::Aligned) != (level == 2)) throw std::invalid_argument("class does not match the level");
            for (int i = 0; i < m; ++i)
                for (int r = 0; r < level; ++r)
                    out[i * level + r] = col[((i + 1) % m) * level + r];
            return out;
        }
        case ColumnClass::Inadmissible:
            throw std::invalid_argument("inadmissible column cannot be rewritten");
    }
    throw std::invalid_argument("unknown column class");
}

PairResult make_cospectral_pair(const BorderedGraph& bg, const RationalOrthogonal& q) {
    PairResult out;
    const int k = q.order();
    if (bg.x.order() != k) {
        out.failure = "inside graph order does not match the orthogonal matrix";
        return out;
    }
    const int nb = bg.b.order();
    if (bg.c.rows() != k || bg.c.cols() != nb) {
        out.failure = "border block shape mismatch";
        return out;
    }
    const int n = k + nb;

    auto inside = check_matrix(bg.x.adjacency_int(), q);
    if (!inside.ok) {
        out.failure = "inside graph fails the window predicate";
        out.witness = inside.witness;
        return out;
    }

    ZeroOneMatrix cprime(k, nb);
    for (int j = 0; j < nb; ++j) {
        std::vector<int> col(k);
        for (int i = 0; i < k; ++i) col[i] = bg.c.get(i, j) ? 1 : 0;
        auto cc = column_admissible(q, col);
        if (!cc.ok) {
            out.failure = "border column fails admissibility";
            out.column = j;
            out.witness = {cc.index, j, cc.num, cc.den};
            return out;
        }
        for (int i = 0; i < k; ++i)
            if (cc.image[i]) cprime.set(i, j, true);
    }

    auto xprime = Graph::from_adjacency(inside.image);
    if (!xprime) throw std::logic_error("conjugated inside block is not a simple adjacency matrix");
    Graph g = assemble_bordered(bg);
    Graph gp = assemble_bordered({std::move(*xprime), cprime, bg.b});

    auto full = as_zero_one(conjugate(extend_identity(q, n), g.adjacency_int()));
    if (!full.ok || !(full.matrix == gp.adjacency()))
        throw std::logic_error("blockwise partner disagrees with the full conjugation");

    out.ok = true;
    out.g = std::move(g);
    out.g_prime = std::move(gp);
    return out;
}

}  // namespace cospectra
