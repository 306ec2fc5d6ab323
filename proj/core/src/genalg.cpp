#include "cospectra/genalg.hpp"

#include "cospectra/blockgrammar.hpp"
#include "cospectra/families.hpp"
#include "cospectra/ortho.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cospectra {

namespace {

constexpr int kSix[6] = {1, 2, 3, 5, 6, 7};

bool in(int x, std::initializer_list<int> set) {
    return std::find(set.begin(), set.end(), x) != set.end();
}

// Index sets of the step-4 rules: P excludes {3,7}, R excludes {2,6},
// S excludes {1,5}.
bool in_p(int x) { return in(x, {1, 2, 4, 5, 6, 8}); }
bool in_r(int x) { return in(x, {1, 3, 4, 5, 7, 8}); }
bool in_s(int x) { return in(x, {2, 3, 4, 6, 7, 8}); }

std::vector<int> choices_level2(int p, int r, int s) {
    const bool fp = in_p(p), fr = in_r(r), fs = in_s(s);
    if (fp && fr && fs) return {4, 8};
    if ((fp && fr && in(s, {1, 5})) || (fp && in(r, {2, 6}) && fs) || (in(p, {3, 7}) && fr && fs))
        return {kSix, kSix + 6};
    return {};
}

std::vector<int> choices_level3(int p, int r, int s) {
    const bool fp = in_p(p), fr = in_r(r);
    if (fp && fr && in(s, {6, 7, 8})) return {4};
    if (fp && fr && in(s, {2, 3, 4})) return {8};
    if ((fp && fr && in(s, {1, 5})) ||
        (fp && r == 2 && in(s, {6, 7, 8})) || (fp && r == 6 && in(s, {2, 3, 4})) ||
        (p == 7 && fr && in(s, {6, 7, 8})) || (p == 3 && fr && in(s, {2, 3, 4})))
        return {kSix, kSix + 6};
    return {};
}

Graph generate(const GenConfig& cfg, GenStats* stats) {
    if (cfg.level != 2 && cfg.level != 3) throw std::invalid_argument("level must be 2 or 3");
    if (cfg.m < 3) throw std::invalid_argument("m must be at least 3");
    const int m = cfg.m;
    auto block_of = [&](int id) -> const IntMatrix& {
        return cfg.level == 2 ? blocks2()[id - 1] : blocks3()[id - 1];
    };
    auto q = build_q(cfg.level, m);
    SplitMix64 rng(cfg.seed);
    GenStats local;
    GenStats& st = stats ? *stats : local;
    st.restarts = 0;

    std::map<std::pair<int, int>, int> ids;
    auto block_at = [&](int i, int j) -> IntMatrix {
        if (i <= j) return block_of(ids[{i, j}]);
        return block_of(ids[{j, i}]).transposed();
    };
    // The construction tables cover every window except those in the last
    // block column, which wrap to column 1; checking each wrap window as soon
    // as its blocks exist keeps rejected attempts cheap.
    auto wrap_ok = [&](int i) {
        const int ip = i % m + 1;
        WindowQuad w;
        w.level = cfg.level;
        w.p = block_at(i, m);
        w.q = block_at(i, 1);
        w.r = block_at(ip, m);
        w.s = block_at(ip, 1);
        return window_admissible(w);
    };
    auto wrap_ready_band = [&](int i) { return i <= m - 2 ? std::max(m - i, i) : m - 1; };

    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        ids.clear();
        const int diag = rng.below(2) == 0 ? 1 : 7;
        for (int i = 1; i <= m; ++i) ids[{i, i}] = diag;
        for (int i = 1; i + 1 <= m; ++i) ids[{i, i + 1}] = kSix[rng.below(6)];

        bool bad = false;
        auto post_band = [&](int b) {
            for (int i = 1; i <= m && !bad; ++i)
                if (wrap_ready_band(i) == b && !wrap_ok(i)) bad = true;
        };
        post_band(1);
        for (int k = 1; k <= m - 2 && !bad; ++k) {
            for (int i = 1; i + k + 1 <= m; ++i) {
                const int p = ids[{i, i + k}];
                const int r = ids[{i + 1, i + k}];
                const int s = ids[{i + 1, i + k + 1}];
                auto ch = cfg.level == 2 ? choices_level2(p, r, s) : choices_level3(p, r, s);
                if (ch.empty()) {
                    bad = true;
                    break;
                }
                ids[{i, i + k + 1}] = ch.size() == 1 ? ch[0] : ch[rng.below(static_cast<uint32_t>(ch.size()))];
            }
            if (!bad) post_band(k + 1);
        }
        if (bad) {
            ++st.restarts;
            continue;
        }

        std::map<std::pair<int, int>, IntMatrix> blocks;
        for (const auto& [key, id] : ids) blocks[key] = block_of(id);
        IntMatrix a = assemble_blocks(cfg.level, m, blocks);
        if (!check_matrix(a, q).ok) {
            ++st.restarts;
            continue;
        }
        auto g = Graph::from_adjacency(a);
        if (!g) throw std::logic_error("generated matrix is not a simple adjacency matrix");
        return *g;
    }
    throw std::runtime_error("retry budget exhausted");
}

}  // namespace

Graph algorithm1(const GenConfig& cfg, GenStats* stats) {
    if (cfg.level != 2) throw std::invalid_argument("algorithm1 runs at level 2");
    return generate(cfg, stats);
}

Graph algorithm2(const GenConfig& cfg, GenStats* stats) {
    if (cfg.level != 3) throw std::invalid_argument("algorithm2 runs at level 3");
    return generate(cfg, stats);
}

std::vector<int> table_choices(int level, int p, int r, int s) {
    if (level == 2) return choices_level2(p, r, s);
    if (level == 3) return choices_level3(p, r, s);
    throw std::invalid_argument("level must be 2 or 3");
}

}  // namespace cospectra
