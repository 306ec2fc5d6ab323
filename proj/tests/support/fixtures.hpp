#pragma once

// Helpers for loading the checked-in matrix fixtures.

#include "cospectra/exactmat.hpp"
#include "cospectra/graph.hpp"

#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(COSPECTRA_FIXTURES) + "/" + name;
}

inline cospectra::ScaledMatrix load_fixture(const std::string& name) {
    return cospectra::load_mat(fixture_path(name));
}

inline cospectra::Graph fixture_graph(const std::string& name) {
    auto m = load_fixture(name);
    if (m.den != 1) throw std::runtime_error(name + ": expected an integer fixture");
    auto g = cospectra::Graph::from_adjacency(m.num);
    if (!g) throw std::runtime_error(name + ": fixture is not a simple adjacency matrix");
    return *g;
}

}  // namespace testsupport
