#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strucprof/structure.hpp"

namespace strucprof {

// The ten almost-multichain graphs on pairs (n, side), side 0 = A, side 1 = B:
//   1..3: A, B independent; cross edge {(n,0),(m,1)} iff n = m / n <= m / n != m
//   4,5,7: as 1,2,3 with A a clique; 6: as 2 with B a clique
//   8..10: as 1,2,3 with both A and B cliques
// prefix uses indices 0..l-1, vertex order (0,0),(0,1),(1,0),(1,1),...
RelStructure ten_graph(int i, int l);

// Template for structures freely interpreted by an almost-multichain on
// F u (L x K): tuple membership depends only on the pattern of each
// coordinate (an F-constant, or the rank of its L-value within the tuple plus
// its K-coordinate). Patterns are keyed by a normalized string, e.g.
// "F0,L0K1,L1K0"; missing patterns mean false.
struct AMCTemplate {
    Signature signature;
    int f_size = 0;
    int k_size = 0;
    std::vector<std::map<std::string, bool>> tables;  // one per relation

    // Pattern of a concrete coordinate list; coords are (is_f, f_index) or
    // (is_f=false, l_value, k_value).
    struct Coord {
        bool is_f = false;
        int f_index = 0;
        int l_value = 0;
        int k_value = 0;
    };
    static std::string pattern_of(const std::vector<Coord>& coords);
};

AMCTemplate parse_amc_template(const std::string& text);
AMCTemplate load_amc_template(const std::string& path);
std::string serialize_amc_template(const AMCTemplate& t);

// Structure on F followed by l x K pairs in (n, k) order; every relation read
// off the pattern table, so all order-preserving index maps extended by the
// identity on F and K are local isomorphisms by construction.
RelStructure amc_build(const AMCTemplate& t, int l);

// The interpreting almost-multichain itself: reflexive order, level
// equivalence, one unary relation per K-coordinate, one per F-constant.
RelStructure amc_multichain(const AMCTemplate& t, int l);

// Ordered template over `columns` columns whose edge relation joins column 0
// to the last column by the half-graph rule; its profile dominates
// w_sequence(columns). The s = 2 instance is the golden exponential witness.
AMCTemplate ordered_halfgraph_template(int columns = 2);

// Blow-up of the graph h: vertex i replaced by parts[i] fresh vertices
// (clique or independent set), cross edges following h.
struct LexPart {
    int size = 0;
    bool clique = false;
};
RelStructure lex_sum(const RelStructure& h, const std::vector<LexPart>& parts);

// Generators of arbitrarily large finite prefixes of an infinite structure.
class FamilyGenerator {
  public:
    static FamilyGenerator ten(int i);
    static FamilyGenerator half_graph();
    static FamilyGenerator amc(AMCTemplate t, std::string name);
    // part caps: nullopt = unbounded part (grows with the prefix)
    struct LexFamilyPart {
        std::optional<int> cap;
        bool clique = false;
    };
    static FamilyGenerator lex(RelStructure h, std::vector<LexFamilyPart> parts,
                               std::string name);
    static FamilyGenerator direct_sum(RelStructure summand, std::string name);

    RelStructure prefix(int l) const;
    const std::string& name() const { return name_; }
    bool bounded() const;          // prefixes eventually constant
    bool graph_family() const;     // prefixes are loopless undirected graphs

  private:
    enum class Kind { Ten, Amc, Lex, Direct };
    Kind kind_ = Kind::Ten;
    int ten_index_ = 1;
    AMCTemplate template_;
    RelStructure base_;
    std::vector<LexFamilyPart> lex_parts_;
    std::string name_;
};

// Descriptor mini-language: G1..G10, halfgraph, lexsum:<h-file>:<parts>,
// amc:<template-file>; lexsum parts are comma-separated `c`/`i` (unbounded)
// or `<n>c`/`<n>i` (capped).
FamilyGenerator parse_family(const std::string& descriptor);

// Indices i such that ten_graph(i, t) embeds induced into prefix(family, l).
std::vector<int> obstruction_search(const FamilyGenerator& family, int l, int t);

// Partial order on letters with explicit domain; relation is reflexive and
// transitively closed on construction.
struct AlphabetOrder {
    std::set<char> letters;
    std::set<std::pair<char, char>> leq;

    static AlphabetOrder equality(const std::string& letters);
    static AlphabetOrder chain(const std::string& letters_in_order);
    bool less_equal(char a, char b) const;
};

// Subword ordering with letter comparison: an increasing injection h with
// v[i] <= w[h(i)]; the greedy left-to-right match decides it.
bool higman_leq(const std::string& v, const std::string& w, const AlphabetOrder& order);

}  // namespace strucprof
