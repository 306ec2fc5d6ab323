#include "cospectra/families.hpp"

#include <stdexcept>

namespace cospectra {

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "flower") return Family::flower;
    if (name == "sunflower") return Family::sunflower;
    if (name == "example4") return Family::example4;
    if (name == "example6") return Family::example6;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::flower: return "flower";
        case Family::sunflower: return "sunflower";
        case Family::example4: return "example4";
        case Family::example6: return "example6";
    }
    return "?";
}

int family_level(Family f) { return f == Family::example6 ? 3 : 2; }

bool family_size_ok(Family f, int m) {
    switch (f) {
        case Family::flower: return m >= 3 && m % 2 == 1;
        case Family::sunflower:
        case Family::example4: return m >= 5 && m % 2 == 1;
        case Family::example6: return m >= 5;
    }
    return false;
}

std::map<std::pair<int, int>, int> family_blocks(const FamilySpec& spec) {
    if (!family_size_ok(spec.family, spec.m)) throw std::invalid_argument("family size/parity violation");
    const int m = spec.m;
    std::map<std::pair<int, int>, int> blocks;
    switch (spec.family) {
        case Family::flower: {
            for (int i = 1; i <= m; ++i) blocks[{i, i}] = 7;
            for (int i = 1; i <= (m + 1) / 2; ++i) blocks[{i, i + (m + 1) / 2 - 1}] = 2;
            for (int i = 1; i <= (m - 1) / 2; ++i) blocks[{i, i + (m + 1) / 2}] = 4;
            break;
        }
        case Family::sunflower: {
            const int h = (m - 1) / 2;
            for (int i = 1; i <= h + 2; ++i) blocks[{i, i + h - 1}] = 6;
            for (int i = 1; i <= h; ++i) blocks[{i, i + h + 1}] = 6;
            for (int i = 1; i <= h + 1; ++i) blocks[{i, i + h}] = 8;
            for (int i = 1; i <= h - 1; ++i) blocks[{i, i + h + 2}] = 8;
            break;
        }
        case Family::example4: {
            const int h = (m - 1) / 2;
            for (int i = 1; i <= h + 2; ++i) blocks[{i, i + h - 1}] = 7;
            for (int i = 1; i <= h - 1; ++i) blocks[{i, i + h + 2}] = 7;
            for (int i = 1; i <= h + 1; ++i) blocks[{i, i + h}] = 6;
            for (int i = 1; i <= h; ++i) blocks[{i, i + h + 1}] = 8;
            break;
        }
        case Family::example6: {
            for (int i = 1; i + 1 <= m; ++i) blocks[{i, i + 1}] = 2;
            for (int i = 1; i + 2 <= m; ++i) blocks[{i, i + 2}] = 8;
            blocks[{1, m - 1}] = 6;
            blocks[{1, m}] = 3;
            break;
        }
    }
    return blocks;
}

IntMatrix assemble_blocks(int level, int m, const std::map<std::pair<int, int>, IntMatrix>& blocks) {
    const int b = level;
    IntMatrix a(b * m, b * m);
    for (const auto& [key, blk] : blocks) {
        const auto [i, j] = key;
        if (i < 1 || j < i || j > m) throw std::invalid_argument("block index out of range");
        if (blk.rows() != b || blk.cols() != b) throw std::invalid_argument("block order mismatch");
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < b; ++c) {
                a.at((i - 1) * b + r, (j - 1) * b + c) = blk.at(r, c);
                if (i != j) a.at((j - 1) * b + c, (i - 1) * b + r) = blk.at(r, c);
            }
    }
    return a;
}

Graph build_family(const FamilySpec& spec) {
    const int level = family_level(spec.family);
    const auto ids = family_blocks(spec);
    const auto& alphabet2 = blocks2();
    const auto& alphabet3 = blocks3();
    std::map<std::pair<int, int>, IntMatrix> blocks;
    for (const auto& [key, id] : ids)
        blocks[key] = level == 2 ? alphabet2[id - 1] : alphabet3[id - 1];
    IntMatrix a = assemble_blocks(level, spec.m, blocks);
    auto q = build_q(level, spec.m);
    if (!check_matrix(a, q).ok) throw std::logic_error("family layout failed admissibility");
    auto g = Graph::from_adjacency(a);
    if (!g) throw std::logic_error("family layout is not a simple adjacency matrix");
    return *g;
}

SubstitutionResult apply_substitution(const Graph& g, int level, const std::vector<BlockSub>& subs) {
    const int n = g.order();
    if (level != 2 && level != 3) throw std::invalid_argument("level must be 2 or 3");
    if (n % level != 0) throw std::invalid_argument("order not divisible by the level");
    const int m = n / level;
    IntMatrix a = g.adjacency_int();
    for (const auto& sub : subs) {
        if (sub.i < 1 || sub.i > sub.j || sub.j > m) throw std::invalid_argument("substitution slot out of range");
        if (sub.block.rows() != level || sub.block.cols() != level || !sub.block.is_zero_one())
            throw std::invalid_argument("replacement block must be a (0,1)-matrix of the block order");
        if (sub.i == sub.j && (!sub.block.is_symmetric() || !sub.block.is_zero_diagonal()))
            throw std::invalid_argument("diagonal replacement must be symmetric with zero diagonal");
        for (int r = 0; r < level; ++r)
            for (int c = 0; c < level; ++c) {
                a.at((sub.i - 1) * level + r, (sub.j - 1) * level + c) = sub.block.at(r, c);
                if (sub.i != sub.j) a.at((sub.j - 1) * level + c, (sub.i - 1) * level + r) = sub.block.at(r, c);
            }
    }
    auto q = build_q(level, m);
    auto check = check_matrix(a, q);
    SubstitutionResult out;
    if (!check.ok) {
        out.witness = check.witness;
        return out;
    }
    auto ng = Graph::from_adjacency(a);
    if (!ng) throw std::logic_error("substituted matrix is not a simple adjacency matrix");
    out.ok = true;
    out.graph = *ng;
    return out;
}

}  // namespace cospectra
