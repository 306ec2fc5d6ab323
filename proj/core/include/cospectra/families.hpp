#pragma once

// Named infinite families of admissible graphs and blockwise substitution
// variants of them.

#include "blockgrammar.hpp"
#include "graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospectra {

enum class Family { flower, sunflower, example4, example6 };

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);
int family_level(Family f);                // 2 except example6, which is 3
bool family_size_ok(Family f, int m);      // flower: odd m >= 3; sunflower, example4: odd m >= 5; example6: m >= 5

struct FamilySpec {
    Family family = Family::flower;
    int m = 0;
};

// Upper-triangle block layout, keys (i, j) 1-based with i <= j, values
// 1-based alphabet ids (blocks2 for level 2, blocks3 for level 3).
// Unlisted blocks are zero.
std::map<std::pair<int, int>, int> family_blocks(const FamilySpec& spec);

// Assembles strict-upper blocks mirrored plus diagonal blocks as given.
IntMatrix assemble_blocks(int level, int m, const std::map<std::pair<int, int>, IntMatrix>& blocks);

// Throws std::invalid_argument on a size/parity violation.  The result is
// guaranteed admissible for build_q(level, m).
Graph build_family(const FamilySpec& spec);

struct BlockSub {
    int i = 0, j = 0;   // 1-based, i <= j
    IntMatrix block;    // replacement; diagonal slots need symmetric zero-diagonal blocks
};

struct SubstitutionResult {
    bool ok = false;
    Graph graph;            // meaningful when ok
    EntryWitness witness;   // offending conjugated entry when !ok
};

// Replaces the given blocks of g's level-partitioned adjacency matrix, then
// re-validates the whole matrix against the canonical q of matching size.
// Admissibility of a variant is decided by that predicate, nothing else.
SubstitutionResult apply_substitution(const Graph& g, int level, const std::vector<BlockSub>& subs);

}  // namespace cospectra
