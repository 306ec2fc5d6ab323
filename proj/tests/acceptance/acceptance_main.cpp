// End-to-end acceptance checks.  Prints one PASS/FAIL line per criterion and
// exits with the number of failures.

#include "cospectra/blockgrammar.hpp"
#include "cospectra/families.hpp"
#include "cospectra/genalg.hpp"
#include "cospectra/graphio.hpp"
#include "cospectra/ortho.hpp"
#include "cospectra/spectra.hpp"
#include "cospectra/switching.hpp"
#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace cospectra;

namespace {

int failures = 0;

template <typename Fn>
void run(int idx, Fn fn) {
    std::string detail;
    bool ok = true;
    try {
        detail = fn();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
    if (!ok) ++failures;
}

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

IntMatrix block_rotation(int b, int m, int s) {
    IntMatrix p(b * m, b * m);
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < b; ++r) p.at(((i + s) % m) * b + r, i * b + r) = 1;
    return p;
}

IntMatrix block_reversal(int b, int m) {
    IntMatrix p(b * m, b * m);
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < b; ++r) p.at((m - 1 - i) * b + r, i * b + r) = 1;
    return p;
}

BorderedGraph split_graph(const Graph& g, int k) {
    const int n = g.order();
    Graph x(k), b(n - k);
    ZeroOneMatrix c(k, n - k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.edge(u, v)) continue;
            if (v < k)
                x.set_edge(u, v, true);
            else if (u >= k)
                b.set_edge(u - k, v - k, true);
            else
                c.set(u, v - k, true);
        }
    return {x, c, b};
}

// Plain exhaustive backtracking with degree pruning only, independent of the
// library's certificate: returns true when some isomorphism exists.
bool search_extend(const Graph& g, const Graph& h, const std::vector<int>& order, size_t depth,
                   std::vector<int>& map, std::vector<bool>& used, long long& nodes) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        bool fits = true;
        for (size_t d = 0; d < depth && fits; ++d)
            if (g.edge(v, order[d]) != h.edge(map[order[d]], w)) fits = false;
        if (!fits) continue;
        ++nodes;
        map[v] = w;
        used[w] = true;
        if (search_extend(g, h, order, depth + 1, map, used, nodes)) return true;
        used[w] = false;
    }
    return false;
}

bool exhaustive_isomorphism(const Graph& g, const Graph& h, long long& nodes) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    nodes = 0;
    return search_extend(g, h, order, 0, map, used, nodes);
}

std::string criterion1() {
    for (int level : {2, 3})
        for (int m = 2; m <= 8; ++m) {
            auto q = build_q(level, m);
            auto v = validate(q.q);
            if (!v.ok) fail("level " + std::to_string(level) + " m " + std::to_string(m) + ": " + v.reason);
            if (v.value.level != level)
                fail("level " + std::to_string(level) + " m " + std::to_string(m) + ": computed level " +
                     std::to_string(v.value.level));
        }
    return "canonical forms validate exactly with the requested level, both levels, m 2..8";
}

std::string criterion2() {
    // 18x18, level 2: the stored orthogonal matrix is a permuted representative
    // of the canonical one; tie it to the canonical form both ways, then
    // conjugate.
    {
        auto a = testsupport::load_fixture("l2_m9_a.mat");
        auto b = testsupport::load_fixture("l2_m9_b.mat");
        auto cq = build_q(2, 9);
        IntMatrix w = block_reversal(2, 9);
        IntMatrix rot1 = block_rotation(2, 9, 1);
        IntMatrix mnum = rot1 * w * cq.q.num * w;
        if (!(mnum == cq.q.num.transposed() * rot1)) fail("18x18: permuted representative identity broke");
        auto v = validate(ScaledMatrix{mnum, 2});
        if (!v.ok || v.value.level != 2) fail("18x18: representative fails validation");
        auto img = as_zero_one(conjugate(ScaledMatrix{mnum, 2}, a.num));
        if (!img.ok || !(img.matrix.to_int() == b.num)) fail("18x18 conjugation mismatch");
    }
    struct Row {
        const char* a;
        const char* b;
        int level, m;
    };
    const Row rows[] = {
        {"flower_m5_a.mat", "flower_m5_b.mat", 2, 5},
        {"sunflower_m7_a.mat", "sunflower_m7_b.mat", 2, 7},
        {"example4_m7_a.mat", "example4_m7_b.mat", 2, 7},
        {"l3_m4_a.mat", "l3_m4_b.mat", 3, 4},
        {"example6_m6_a.mat", "example6_m6_b.mat", 3, 6},
    };
    for (const auto& row : rows) {
        auto a = testsupport::load_fixture(row.a);
        auto b = testsupport::load_fixture(row.b);
        auto res = check_matrix(a.num, build_q(row.level, row.m));
        if (!res.ok) fail(std::string(row.a) + ": inadmissible");
        if (!(res.image.to_int() == b.num)) fail(std::string(row.a) + ": conjugation mismatch");
    }
    return "all six stored conjugation examples reproduce bit-exactly";
}

std::string criterion3() {
    const auto quads = enumerate_offdiag_level2();
    int low = 0, high = 0, mixed = 0, with9 = 0, literal_bad = 0;
    for (const auto& t : quads) {
        const int ids[4] = {t.p, t.q, t.r, t.s};
        bool all_low = true, all_high = true, all_lit = true, has9 = false;
        for (int id : ids) {
            all_low &= id <= 8;
            all_high &= id >= 9;
            all_lit &= id >= 10;
            has9 |= id == 9;
        }
        low += all_low;
        high += all_high;
        mixed += !(all_low || all_high);
        literal_bad += !(all_low || all_lit);
        with9 += has9;
    }
    if (quads.size() != 3776) fail("off-diagonal sweep: " + std::to_string(quads.size()) + " admissible");
    if (mixed != 0) fail("off-diagonal sweep: " + std::to_string(mixed) + " mixed-family windows");
    if (low != 1728 || high != 2048) fail("off-diagonal split drifted");

    const auto diags = enumerate_diag_level2();
    std::set<std::array<int, 3>> got, want;
    for (const auto& t : diags) got.insert({t.d, t.c, t.dp});
    for (int d : {1, 7})
        for (int c : {1, 2, 3, 5, 6, 7}) want.insert({d, c, d});
    if (got != want) fail("diagonal characterization mismatch");

    std::ostringstream d;
    d << "65536-case sweep: " << quads.size() << " admissible, families ids 1..8 (" << low
      << ") and ids 9..16 (" << high << "), none mixed; diagonal characterization exact; note: the"
      << " documented second family 'ids 10..16' misses " << literal_bad << " windows (" << with9
      << " contain id 9, e.g. the constant id-9 window), the computed boundary is id 9";
    return d.str();
}

std::string criterion4() {
    const auto trips = enumerate_diag_level3();
    if (trips.size() != 814) fail("diagonal sweep: " + std::to_string(trips.size()) + " admissible");
    std::set<int> zero_diag;
    for (const auto& t : trips)
        if (t.d == 1 && t.dp == 1) zero_diag.insert(t.c_bits);
    std::set<int> table;
    for (const auto& b : band3()) table.insert(pack3(b));
    if (table.size() != 56) fail("band alphabet size drifted");
    if (zero_diag != table) fail("zero-diagonal middles differ from the band alphabet");
    return "32768-case sweep: zero-diagonal admissible middles equal the 56-matrix band alphabet as a set";
}

std::string criterion5() {
    int max_restarts = 0;
    for (int i = 0; i < 500; ++i) {
        GenConfig cfg;
        cfg.level = 2;
        cfg.m = 3 + i % 6;
        cfg.seed = 1000 + i;
        GenStats stats;
        Graph g = algorithm1(cfg, &stats);
        max_restarts = std::max(max_restarts, stats.restarts);
        if (!check_matrix(g.adjacency_int(), build_q(2, cfg.m)).ok)
            fail("level-2 run " + std::to_string(i) + " produced an inadmissible graph");
    }
    for (int i = 0; i < 500; ++i) {
        GenConfig cfg;
        cfg.level = 3;
        cfg.m = 3 + i % 5;
        cfg.seed = 2000 + i;
        GenStats stats;
        Graph g = algorithm2(cfg, &stats);
        max_restarts = std::max(max_restarts, stats.restarts);
        if (!check_matrix(g.adjacency_int(), build_q(3, cfg.m)).ok)
            fail("level-3 run " + std::to_string(i) + " produced an inadmissible graph");
    }
    for (int i = 0; i < 10; ++i) {
        GenConfig c2{2, 3 + i % 6, static_cast<uint64_t>(1000 + i)};
        GenConfig c3{3, 3 + i % 5, static_cast<uint64_t>(2000 + i)};
        if (!(algorithm1(c2).adjacency_int() == algorithm1(c2).adjacency_int()) ||
            !(algorithm2(c3).adjacency_int() == algorithm2(c3).adjacency_int()))
            fail("re-run with seed " + std::to_string(c2.seed) + " diverged");
    }
    return "1000 seeded runs (500 per level) all pass the exact window predicate; 20 re-runs "
           "byte-identical; worst restart count " +
           std::to_string(max_restarts);
}

std::string criterion6() {
    struct Pair {
        const char* a;
        const char* b;
        int level, m, k;
    };
    const Pair pairs[] = {
        {"switch_n9_a.mat", "switch_n9_b.mat", 2, 3, 6},
        {"switch_n18_a.mat", "switch_n18_b.mat", 3, 5, 15},
    };
    std::string note;
    for (const auto& pr : pairs) {
        auto a = testsupport::fixture_graph(pr.a);
        auto b = testsupport::fixture_graph(pr.b);
        auto res = make_cospectral_pair(split_graph(a, pr.k), build_q(pr.level, pr.m));
        if (!res.ok) fail(std::string(pr.a) + ": " + res.failure);
        if (!(res.g.adjacency_int() == a.adjacency_int())) fail(std::string(pr.a) + ": reassembly drifted");
        if (!(res.g_prime.adjacency_int() == b.adjacency_int()))
            fail(std::string(pr.a) + ": partner is not the stored one");
        if (!cospectral(res.g, res.g_prime)) fail(std::string(pr.a) + ": pair is not cospectral");
        if (!cospectral(complement(res.g), complement(res.g_prime)))
            fail(std::string(pr.a) + ": complements are not cospectral");
    }
    {
        auto a = testsupport::fixture_graph("switch_n9_a.mat");
        auto b = testsupport::fixture_graph("switch_n9_b.mat");
        if (a.degree_sequence() == b.degree_sequence()) fail("9-vertex pair: degree sequences agree");
        if (isomorphic(a, b).isomorphic) fail("9-vertex pair: isomorphic");
    }
    {
        auto a = testsupport::fixture_graph("switch_n18_a.mat");
        auto b = testsupport::fixture_graph("switch_n18_b.mat");
        if (a.degree_sequence() != b.degree_sequence())
            fail("18-vertex pair: degree sequences differ, search not exercised");
        long long nodes = 0;
        if (exhaustive_isomorphism(a, b, nodes)) fail("18-vertex pair: isomorphism found");
        if (isomorphic(a, b).isomorphic) fail("18-vertex pair: library certificate disagrees");
        note = " (search exhausted after " + std::to_string(nodes) + " nodes)";
    }
    return "both stored pairs reproduce bit-exactly, cospectral with cospectral complements; 9-vertex "
           "pair split by degree sequences, 18-vertex pair by exhausted search over equal degree "
           "sequences" +
           note;
}

std::string criterion7() {
    const int want[5] = {8, 16, 32, 64, 128};
    for (int m = 2; m <= 6; ++m) {
        const int k = 2 * m;
        auto q = build_q(2, m);
        int admissible = 0;
        for (long long bits = 0; bits < (1LL << k); ++bits) {
            std::vector<int> col(k);
            for (int i = 0; i < k; ++i) col[i] = bits >> i & 1;
            const bool exact = column_admissible(q, col).ok;
            const bool classed = classify_column(2, m, col) != ColumnClass::Inadmissible;
            if (exact != classed)
                fail("k=" + std::to_string(k) + ": class and exact test disagree on column " +
                     std::to_string(bits));
            admissible += exact;
        }
        if (admissible != want[m - 2])
            fail("k=" + std::to_string(k) + ": " + std::to_string(admissible) + " admissible columns");
    }
    return "level 2, k in {4,6,8,10,12}: classification coincides with the exact test on every "
           "column; admissible counts 8/16/32/64/128";
}

std::string criterion8() {
    const int want_total[3] = {22, 8, 178};
    const int want_grouped[3] = {4, 8, 16};
    std::string probe_note;
    std::ostringstream extras_note;
    for (int m = 2; m <= 4; ++m) {
        const int k = 3 * m;
        auto q = build_q(3, m);
        int admissible = 0, grouped = 0, extras = 0;
        for (long long bits = 0; bits < (1LL << k); ++bits) {
            std::vector<int> col(k);
            for (int i = 0; i < k; ++i) col[i] = bits >> i & 1;
            const bool exact = column_admissible(q, col).ok;
            const auto cls = classify_column(3, m, col);
            if (cls == ColumnClass::Grouped && !exact)
                fail("k=" + std::to_string(k) + ": grouped column " + std::to_string(bits) +
                     " fails the exact test");
            admissible += exact;
            grouped += cls == ColumnClass::Grouped;
            extras += exact && cls == ColumnClass::Inadmissible;
        }
        if (admissible != want_total[m - 2] || grouped != want_grouped[m - 2])
            fail("k=" + std::to_string(k) + ": counts " + std::to_string(admissible) + "/" +
                 std::to_string(grouped) + " drifted");
        extras_note << (m > 2 ? ", " : "") << "k=" << k << ": " << extras;
    }
    {
        auto cc = column_admissible(build_q(3, 2), {1, 0, 0, 1, 1, 0});
        if (!cc.ok) fail("probe column 100110 is not admissible");
        if (classify_column(3, 2, {1, 0, 0, 1, 1, 0}) != ColumnClass::Inadmissible)
            fail("probe column 100110 unexpectedly carries a class");
        probe_note = "; probe column 100110 admissible without a class";
    }
    return "level 3, k in {6,9,12}: every grouped column passes the exact test; admissible columns "
           "outside the rule reported without failing (" +
           extras_note.str() + ")" + probe_note;
}

std::string criterion9() {
    // conjugation preserves the characteristic polynomial on every stored pair
    const char* names[] = {"l2_m9", "flower_m5", "sunflower_m7", "example4_m7", "l3_m4",
                           "example6_m6", "switch_n9", "switch_n18"};
    for (const char* n : names) {
        auto a = testsupport::fixture_graph(std::string(n) + "_a.mat");
        auto b = testsupport::fixture_graph(std::string(n) + "_b.mat");
        if (!(char_poly(a) == char_poly(b))) fail(std::string(n) + ": polynomials differ");
        if (!(char_poly(complement(a)) == char_poly(complement(b))))
            fail(std::string(n) + ": complement polynomials differ");
    }

    SplitMix64 rng(424242);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(30));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2)) g.set_edge(u, v, true);
        auto dec = graph6_decode(graph6_encode(g));
        if (!dec.ok || !(dec.graph.adjacency_int() == g.adjacency_int()))
            fail("graph6 round trip " + std::to_string(rep) + " failed");
    }

    long long rewrites = 0;
    for (int level : {2, 3})
        for (int m = 2; level * m <= 12; ++m) {
            const int k = level * m;
            auto q = build_q(level, m);
            for (long long bits = 0; bits < (1LL << k); ++bits) {
                std::vector<int> col(k);
                for (int i = 0; i < k; ++i) col[i] = bits >> i & 1;
                const auto cls = classify_column(level, m, col);
                if (cls == ColumnClass::Inadmissible) continue;
                auto cc = column_admissible(q, col);
                if (!cc.ok) fail("classified column fails the exact test");
                if (switch_border(level, m, col, cls) != cc.image)
                    fail("rewrite differs from the exact image at k=" + std::to_string(k));
                ++rewrites;
            }
        }
    std::ostringstream d;
    d << "polynomials and complement polynomials agree on all 8 stored pairs; 1000 graph6 round "
         "trips; "
      << rewrites << " classified columns rewrite to the exact conjugated image (k <= 12)";
    return d.str();
}

}  // namespace

int main() {
    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, criterion9);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
