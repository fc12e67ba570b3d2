#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "strucprof/structure.hpp"

namespace strucprof {

// Byte string identifying the isomorphism class of a structure: two
// structures of equal signature have equal codes iff they are isomorphic.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

// Exact canonical form via iterative color refinement with
// individualize-and-refine backtracking; a pattern-homogeneity shortcut
// terminates branches whose remaining cells cannot influence the code.
CanonicalCode canonical_code(const RelStructure& s);

bool is_isomorphic(const RelStructure& r, const RelStructure& s);

// Induced embedding of r into s: returns a map (r-vertex -> s-vertex) with
// restrict_to(s, image) isomorphic to r via that map, or nullopt.
std::optional<std::vector<int>> embeds(const RelStructure& r, const RelStructure& s);

}  // namespace strucprof
