#include "cospectra/spectra.hpp"

#include "cospectra/genalg.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>

using namespace cospectra;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.set_edge(n - 1, 0, true);
    return g;
}

std::vector<Int> coeffs(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.edge(u, v)) h.set_edge(perm[u], perm[v], true);
    return h;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("characteristic polynomials of tiny graphs") {
    CHECK(char_poly(Graph(3)).coeffs == coeffs({1, 0, 0, 0}));
    CHECK(char_poly(path(2)).coeffs == coeffs({1, 0, -1}));
    CHECK(char_poly(path(3)).coeffs == coeffs({1, 0, -2, 0}));
    CHECK(char_poly(Graph(0)).coeffs == coeffs({1}));
}

TEST_CASE("characteristic polynomials of stored graphs") {
    CHECK(char_poly(testsupport::fixture_graph("flower_m5_a.mat")).coeffs ==
          coeffs({1, 0, -15, -10, 70, 78, -100, -160, -15, 30, -4}));
    CHECK(char_poly(testsupport::fixture_graph("switch_n9_a.mat")).coeffs ==
          coeffs({1, 0, -21, -28, 65, 86, -84, -64, 48, 0}));
    CHECK(char_poly(testsupport::fixture_graph("switch_n18_a.mat")).coeffs ==
          coeffs({1, 0, -59, -54, 919, 728, -5789, -2966, 15800, 4400, -18016, -1468, 7472, -640,
                  -328, 0, 0, 0, 0}));
}

TEST_CASE("leading coefficients track order and size") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        GenConfig cfg;
        cfg.level = 2;
        cfg.m = 4;
        cfg.seed = seed;
        auto g = algorithm1(cfg);
        auto p = char_poly(g);
        REQUIRE(p.degree() == g.order());
        CHECK(p.coeffs[0] == 1);
        CHECK(p.coeffs[1] == 0);
        CHECK(p.coeffs[2] == -Int(g.edge_count()));
    }
}

TEST_CASE("polynomial is invariant under relabeling") {
    auto g = testsupport::fixture_graph("flower_m5_a.mat");
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(7);
    for (int i = g.order() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    CHECK(char_poly(g) == char_poly(relabel(g, perm)));
}

TEST_CASE("printing") {
    CHECK(char_poly(path(3)).to_string() == "x^3 - 2*x");
    CHECK(char_poly(Graph(3)).to_string() == "x^3");
    CHECK(char_poly(path(2)).to_string() == "x^2 - 1");
}

TEST_CASE("matrix form matches by hand computation") {
    IntMatrix m(2, 2);
    m.at(0, 0) = m.at(1, 1) = 2;
    m.at(0, 1) = m.at(1, 0) = 1;
    CHECK(char_poly(m).coeffs == coeffs({1, -4, 3}));
    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("cospectrality") {
    auto g = testsupport::fixture_graph("switch_n9_a.mat");
    auto h = testsupport::fixture_graph("switch_n9_b.mat");
    CHECK(cospectral(g, h));
    CHECK(cospectral(g, g));

    // same order, different spectrum
    Graph k2k1(3);
    k2k1.set_edge(0, 1, true);
    CHECK_FALSE(cospectral(k2k1, path(3)));

    CHECK_THROWS_AS(cospectral(g, path(3)), std::invalid_argument);
}

TEST_CASE("complement") {
    auto c = complement(Graph(3));
    CHECK(c.edge_count() == 3);
    auto g = testsupport::fixture_graph("flower_m5_a.mat");
    CHECK(complement(complement(g)).adjacency_int() == g.adjacency_int());
    CHECK(g.edge_count() + complement(g).edge_count() == g.order() * (g.order() - 1) / 2);
}

TEST_CASE("isomorphism finds a verified map") {
    auto g = testsupport::fixture_graph("flower_m5_a.mat");
    std::vector<int> perm = {3, 1, 4, 9, 2, 6, 5, 7, 0, 8};
    auto h = relabel(g, perm);
    auto cert = isomorphic(g, h);
    REQUIRE(cert.isomorphic);
    REQUIRE(static_cast<int>(cert.perm.size()) == g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            CHECK(g.edge(u, v) == h.edge(cert.perm[u], cert.perm[v]));
}

TEST_CASE("isomorphism rejections name the invariant") {
    auto a = testsupport::fixture_graph("switch_n9_a.mat");
    auto b = testsupport::fixture_graph("switch_n9_b.mat");
    auto cert = isomorphic(a, b);
    CHECK_FALSE(cert.isomorphic);
    CHECK(cert.witness == "degree sequences differ");

    CHECK(isomorphic(Graph(3), path(3)).witness == "edge counts differ");
    CHECK(isomorphic(Graph(3), Graph(4)).witness == "orders differ");

    // cospectral regular pair needs the full search
    Graph two_triangles(6);
    for (int b0 : {0, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) two_triangles.set_edge(b0 + i, b0 + j, true);
    auto hard = isomorphic(cycle(6), two_triangles);
    CHECK_FALSE(hard.isomorphic);
    CHECK(hard.witness == "search exhausted");

    CHECK_THROWS_AS(isomorphic(Graph(33), Graph(33)), std::invalid_argument);
}

}  // TEST_SUITE
