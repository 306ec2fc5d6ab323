#pragma once

// graph6 serialization and the CLI entry point binding all modules.

#include "graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cospectra {

// Standard graph6: upper triangle, column-major, 6-bit chunks offset by 63.
std::string graph6_encode(const Graph& g);

struct DecodeResult {
    bool ok = false;
    Graph graph;         // meaningful when ok
    size_t offset = 0;   // byte offset of the malformed input when !ok
    std::string error;
};

DecodeResult graph6_decode(const std::string& text);

// Subcommands: gen | family | switch | verify-window | verify-column |
// cospectral | charpoly.  Returns 0 on success, 1 on certification failure,
// 2 on usage error.  The default seed comes from COSPECTRA_SEED when set;
// --seed overrides.  Reports are JSON with stable key order, byte-identical
// for identical argv + seed.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cospectra
