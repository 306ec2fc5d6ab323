#pragma once

// Exact spectral certificates: integer characteristic polynomials,
// complements, and small-order isomorphism testing with witnesses.

#include "exactmat.hpp"
#include "graph.hpp"

#include <string>
#include <vector>

namespace cospectra {

struct CharPoly {
    // Monic, degree n: coeffs[k] multiplies x^(n-k), coeffs[0] = 1.
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly&) const = default;
    std::string to_string() const;   // "x^3 - 2*x" style, decimal coefficients
};

// Division-free exact computation, intended scale n <= 64.
CharPoly char_poly(const IntMatrix& a);
CharPoly char_poly(const Graph& g);

// Equality of characteristic polynomials; throws std::invalid_argument on an
// order mismatch.
bool cospectral(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

struct IsoCertificate {
    bool isomorphic = false;
    std::vector<int> perm;   // vertex map g -> h when isomorphic, verified exactly
    std::string witness;     // distinguishing invariant, or "search exhausted"
};

// Exact backtracking with degree and neighbor-degree pruning; n <= 32
// (throws std::invalid_argument beyond that).
IsoCertificate isomorphic(const Graph& g, const Graph& h);

}  // namespace cospectra
