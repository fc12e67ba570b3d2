#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strucprof/canonical.hpp"
#include "strucprof/structure.hpp"

namespace strucprof {

enum class PartitionKind { Components, Interval, User };

struct Partition {
    std::vector<std::vector<int>> blocks;  // sorted members, blocks sorted by minimum
    PartitionKind kind = PartitionKind::User;

    static Partition of(std::vector<std::vector<int>> blocks, PartitionKind kind, int domain_size);

    int block_of(int v) const { return block_index_[v]; }
    int domain_size() const { return static_cast<int>(block_index_.size()); }
    bool refines(const Partition& coarser) const;
    std::string serialize() const;  // one block per line, comma-separated

    bool operator==(const Partition& other) const { return blocks == other.blocks; }

    std::vector<int> block_index_;
};

// Outcome of a single background-set comparison: verdict false certifies that
// the restrictions to {x} u background and {y} u background are non-isomorphic.
struct EquivalenceWitness {
    int x = -1, y = -1;
    std::vector<int> background;
    bool verdict = true;
};

// Shared restriction-code cache for the exchange-equivalence family of tests
// on one structure (domain limited to 64 vertices).
class EquivalenceTester {
  public:
    explicit EquivalenceTester(RelStructure s);

    const RelStructure& structure() const { return s_; }

    bool a_equivalent(int x, int y, const std::vector<int>& a);
    bool k_equivalent(int x, int y, int k);
    bool le_k_equivalent(int x, int y, int k);
    bool fully_equivalent(int x, int y);
    // First failing background set in (size, lex) order, if any.
    std::optional<EquivalenceWitness> fully_equivalent_witness(int x, int y);
    Partition components();

    const CanonicalCode& code_of(std::uint64_t mask);

  private:
    bool a_equivalent_mask(int x, int y, std::uint64_t a_mask);
    RelStructure s_;
    std::unordered_map<std::uint64_t, CanonicalCode> codes_;
    std::vector<std::vector<int>> known_witnesses_;
};

bool a_equivalent(const RelStructure& s, int x, int y, const std::vector<int>& a);
bool k_equivalent(const RelStructure& s, int x, int y, int k);
bool le_k_equivalent(const RelStructure& s, int x, int y, int k);
bool fully_equivalent(const RelStructure& s, int x, int y);

// Partition into the maximal exchange-equivalence classes (the coarsest
// monomorphic decomposition).
Partition components(const RelStructure& s);

// Exhaustive check of the monomorphic-part condition with a shared cache.
class MonomorphyTester {
  public:
    explicit MonomorphyTester(RelStructure s);
    bool is_part(const std::vector<int>& block, int size_cap = -1);
    bool is_decomposition(const Partition& p, int size_cap = -1);

  private:
    RelStructure s_;
    std::unordered_map<std::uint64_t, CanonicalCode> codes_;
    const CanonicalCode& code_of(std::uint64_t mask);
};

bool is_monomorphic_part(const RelStructure& s, const std::vector<int>& block,
                         int size_cap = -1);
bool is_monomorphic_decomposition(const RelStructure& s, const Partition& p);

// Components of the ordered structure split into maximal runs that are
// intervals of the order; kind = Interval.
Partition interval_decomposition(const OrderedStructure& o);

// Every k-subset of the common domain induces isomorphic restrictions.
bool k_hypomorphic(const RelStructure& r, const RelStructure& s, int k);

// The pair (R(x), R(y)) on a shared relabeled domain: drop y (resp. x) and
// move x (resp. y) to the last index z = n-2.
std::pair<RelStructure, RelStructure> identify(const RelStructure& s, int x, int y);

bool p_monomorphic(const RelStructure& s, int p);

// Every local isomorphism of `by` of size <= size_cap is a local isomorphism
// of s (same domain).
bool freely_interpreted_by(const RelStructure& s, const RelStructure& by, int size_cap);

// Partition of a loopless graph into maximal autonomous sets inducing cliques
// or independent sets, from the autonomy definition; independent oracle for
// components on graphs.
Partition autonomous_partition(const RelStructure& g);

// Least p such that p-monomorphic structures of maximal arity m (domain large
// enough) are freely interpretable by a chain: 1, 3, then 2m-2.
int monomorphy_threshold(int m);

}  // namespace strucprof
