#pragma once

// Seeded randomized generators of admissible adjacency matrices, one per
// level.  Deterministic for a fixed (level, m, seed).

#include "graph.hpp"

#include <cstdint>
#include <vector>

namespace cospectra {

// Named portable generator so identical seeds reproduce across platforms.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }
};

struct GenConfig {
    int level = 2;       // 2 selects algorithm1's tables, 3 algorithm2's
    int m = 3;           // block count, at least 3
    uint64_t seed = 0;
    // Restart budget across the whole call.  Rejection of the wrap-around
    // windows thins acceptance exponentially in m (level 3, m = 7 averages
    // tens of thousands of restarts), so the default is generous; restarts
    // are cheap because attempts abort at the first failed window.
    int max_retries = 10000000;
};

struct GenStats {
    int restarts = 0;
};

// Fills the block layout diagonal first, then band by band with i ascending,
// consuming one random choice per free slot; a dead end (no completion
// allowed by the transition table) or a failed wrap-around window restarts
// from scratch, counted against max_retries.  The returned graph is certified
// by check_matrix before return; an exhausted budget throws
// std::runtime_error.
Graph algorithm1(const GenConfig& cfg, GenStats* stats = nullptr);   // level 2
Graph algorithm2(const GenConfig& cfg, GenStats* stats = nullptr);   // level 3

// The block ids the step-4 transition table allows for the slot above-right
// of the window triple (p, r, s); singleton for forced slots, empty at a dead
// end.  Exposed so tests can compare the table against the window oracle.
std::vector<int> table_choices(int level, int p, int r, int s);

}  // namespace cospectra
