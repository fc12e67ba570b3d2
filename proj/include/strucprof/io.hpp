#pragma once

#include <iosfwd>
#include <string>

#include "strucprof/structure.hpp"

namespace strucprof {

// Text format, one structure per file ('#' starts a comment):
//   signature 2 2
//   domain 5
//   rel 0 : 0,1 1,2 3,4
//   rel 1 : 0,0
// Missing `rel i` lines denote empty relations; the empty tuple of a 0-ary
// relation is written `()`. Serialization emits tuples in lexicographic
// order, so parse/serialize round-trips are bit-exact.
RelStructure parse_structure(const std::string& text);
RelStructure load_structure(const std::string& path);
std::string serialize_structure(const RelStructure& s);

}  // namespace strucprof
