#pragma once

// Border-column admissibility, the two edge-rewrite rules, and assembly of
// certified cospectral pairs from a bordered graph.

#include "exactmat.hpp"
#include "graph.hpp"
#include "ortho.hpp"

#include <string>
#include <vector>

namespace cospectra {

// G partitioned as [[A(X), C], [C^T, B]]: an inside graph on k vertices, a
// k x (n-k) border block, and an untouched outside graph.
struct BorderedGraph {
    Graph x;
    ZeroOneMatrix c;
    Graph b;
};

Graph assemble_bordered(const BorderedGraph& bg);

enum class ColumnClass {
    Mixed,          // level 2: exactly one neighbor in every pair
    Aligned,        // level 2: zero or two neighbors in every pair
    Grouped,        // level 3: zero or three neighbors in every triple
    Inadmissible,   // no rule applies (the exact predicate may still pass)
};

std::string column_class_name(ColumnClass c);

struct ColumnCheck {
    bool ok = false;
    std::vector<int> image;   // q^T col when ok, entries 0/1
    int index = -1;           // offending entry when !ok
    Int num = 0;              // its exact value num/den
    Int den = 1;
};

// Ground truth: evaluates q^T col exactly and demands a (0,1) image.
ColumnCheck column_admissible(const RationalOrthogonal& q, const std::vector<int>& col);

// The rule-based classification.  Advisory: at level 3 some columns pass the
// exact predicate without carrying a class.
ColumnClass classify_column(int level, int m, const std::vector<int>& col);

// Rewrites the column per its class: Mixed flips the neighbor within each
// pair, Aligned/Grouped shifts each group's adjacency to the cyclically
// previous group.  Equals q^T col; throws std::invalid_argument on
// Inadmissible or a class/level mismatch.
std::vector<int> switch_border(int level, int m, const std::vector<int>& col, ColumnClass cls);

struct PairResult {
    bool ok = false;
    Graph g;                // assembled input graph when ok
    Graph g_prime;          // its certified partner when ok
    std::string failure;    // what failed when !ok
    int column = -1;        // offending border column (0-based) when applicable
    EntryWitness witness;   // offending entry when applicable
};

// Builds G from bg, conjugates by extend_identity(q, n), and certifies both
// that the inside block and every border column transform to (0,1) values and
// that the blockwise-assembled partner equals the full conjugation exactly.
PairResult make_cospectral_pair(const BorderedGraph& bg, const RationalOrthogonal& q);

}  // namespace cospectra
