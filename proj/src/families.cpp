#include "strucprof/families.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "strucprof/canonical.hpp"
#include "strucprof/io.hpp"

namespace strucprof {

RelStructure ten_graph(int i, int l) {
    if (i < 1 || i > 10) throw RangeError("ten_graph index must be in 1..10");
    if (l < 1) throw RangeError("ten_graph prefix must be positive");
    const bool a_clique = (i == 4 || i == 5 || i == 7 || i >= 8);
    const bool b_clique = (i == 6 || i >= 8);
    const int cross = (i == 1 || i == 4 || i == 8)   ? 0   // n == m
                      : (i == 2 || i == 5 || i == 6 || i == 9) ? 1   // n <= m
                                                               : 2;  // n != m
    std::vector<std::pair<int, int>> edges;
    auto vid = [](int n, int side) { return 2 * n + side; };
    for (int n = 0; n < l; ++n)
        for (int m = 0; m < l; ++m) {
            if (n < m) {
                if (a_clique) edges.emplace_back(vid(n, 0), vid(m, 0));
                if (b_clique) edges.emplace_back(vid(n, 1), vid(m, 1));
            }
            const bool e = cross == 0 ? n == m : cross == 1 ? n <= m : n != m;
            if (e) edges.emplace_back(vid(n, 0), vid(m, 1));
        }
    return make_graph(2 * l, edges);
}

std::string AMCTemplate::pattern_of(const std::vector<Coord>& coords) {
    // ranks of distinct l-values in increasing order
    std::vector<int> lvals;
    for (const auto& c : coords)
        if (!c.is_f) lvals.push_back(c.l_value);
    std::sort(lvals.begin(), lvals.end());
    lvals.erase(std::unique(lvals.begin(), lvals.end()), lvals.end());
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        const auto& c = coords[i];
        if (c.is_f) {
            out += 'F';
            out += std::to_string(c.f_index);
        } else {
            const int rank = static_cast<int>(
                std::lower_bound(lvals.begin(), lvals.end(), c.l_value) - lvals.begin());
            out += 'L';
            out += std::to_string(rank);
            out += 'K';
            out += std::to_string(c.k_value);
        }
    }
    return out;
}

namespace {

// Validates a pattern string for the given template and arity and returns it
// normalized (ranks must form a prefix 0..t-1).
std::string check_pattern(const AMCTemplate& t, int arity, const std::string& pattern) {
    std::vector<AMCTemplate::Coord> coords;
    std::stringstream ss(pattern);
    std::string part;
    while (std::getline(ss, part, ',')) {
        AMCTemplate::Coord c;
        if (part.size() >= 2 && part[0] == 'F') {
            c.is_f = true;
            c.f_index = std::stoi(part.substr(1));
            if (c.f_index < 0 || c.f_index >= t.f_size)
                throw MalformedTemplate("F index out of range in pattern " + pattern);
        } else if (part.size() >= 4 && part[0] == 'L') {
            const auto kpos = part.find('K');
            if (kpos == std::string::npos) throw MalformedTemplate("bad coordinate " + part);
            c.l_value = std::stoi(part.substr(1, kpos - 1));
            c.k_value = std::stoi(part.substr(kpos + 1));
            if (c.l_value < 0) throw MalformedTemplate("negative rank in pattern " + pattern);
            if (c.k_value < 0 || c.k_value >= t.k_size)
                throw MalformedTemplate("K index out of range in pattern " + pattern);
        } else {
            throw MalformedTemplate("bad coordinate '" + part + "' in pattern " + pattern);
        }
        coords.push_back(c);
    }
    if (static_cast<int>(coords.size()) != arity)
        throw MalformedTemplate("pattern " + pattern + " does not match relation arity");
    // ranks must be exactly 0..t-1 for some t
    std::vector<int> ranks;
    for (const auto& c : coords)
        if (!c.is_f) ranks.push_back(c.l_value);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] != static_cast<int>(i))
            throw MalformedTemplate("ranks in pattern " + pattern + " are not contiguous");
    // re-normalize through pattern_of so key formatting is unique
    std::vector<AMCTemplate::Coord> concrete = coords;
    return AMCTemplate::pattern_of(concrete);
}

}  // namespace

AMCTemplate parse_amc_template(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    AMCTemplate t;
    bool have_sig = false, have_k = false;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "signature") {
            int m;
            while (ls >> m) t.signature.arities.push_back(m);
            if (t.signature.arities.empty()) throw MalformedTemplate("empty signature");
            t.tables.resize(t.signature.arities.size());
            have_sig = true;
        } else if (kw == "fsize") {
            if (!(ls >> t.f_size) || t.f_size < 0) throw MalformedTemplate("bad fsize");
        } else if (kw == "ksize") {
            if (!(ls >> t.k_size) || t.k_size < 1) throw MalformedTemplate("bad ksize");
            have_k = true;
        } else if (kw == "rel") {
            if (!have_sig || !have_k) throw MalformedTemplate("rel before signature/ksize");
            int idx, value;
            std::string pattern;
            if (!(ls >> idx >> pattern >> value) || (value != 0 && value != 1))
                throw MalformedTemplate("bad rel line: " + body);
            if (idx < 0 || idx >= t.signature.size())
                throw MalformedTemplate("relation index out of range");
            t.tables[idx][check_pattern(t, t.signature.arities[idx], pattern)] = value != 0;
        } else {
            throw MalformedTemplate("unknown keyword '" + kw + "'");
        }
    }
    if (!have_sig || !have_k) throw MalformedTemplate("missing signature or ksize");
    return t;
}

AMCTemplate load_amc_template(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedTemplate("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_amc_template(buf.str());
}

std::string serialize_amc_template(const AMCTemplate& t) {
    std::ostringstream out;
    out << "signature";
    for (int m : t.signature.arities) out << ' ' << m;
    out << "\nfsize " << t.f_size << "\nksize " << t.k_size << '\n';
    for (int r = 0; r < t.signature.size(); ++r)
        for (const auto& [pattern, value] : t.tables[r])
            if (value) out << "rel " << r << ' ' << pattern << " 1\n";
    return out.str();
}

RelStructure amc_build(const AMCTemplate& t, int l) {
    if (l < 0) throw RangeError("negative prefix length");
    if (t.k_size < 1 || t.f_size < 0 || t.signature.arities.empty())
        throw MalformedTemplate("template is incomplete");
    const int n = t.f_size + l * t.k_size;
    std::vector<std::vector<Tuple>> rels(t.signature.size());
    std::vector<AMCTemplate::Coord> coords;
    for (int r = 0; r < t.signature.size(); ++r) {
        const int m = t.signature.arities[r];
        if (m == 0) {
            auto it = t.tables[r].find("");
            if (it != t.tables[r].end() && it->second) rels[r].push_back({});
            continue;
        }
        if (n == 0) continue;
        Tuple v(m, 0);
        while (true) {
            coords.clear();
            for (int p = 0; p < m; ++p) {
                AMCTemplate::Coord c;
                if (v[p] < t.f_size) {
                    c.is_f = true;
                    c.f_index = v[p];
                } else {
                    c.l_value = (v[p] - t.f_size) / t.k_size;
                    c.k_value = (v[p] - t.f_size) % t.k_size;
                }
                coords.push_back(c);
            }
            const auto it = t.tables[r].find(AMCTemplate::pattern_of(coords));
            if (it != t.tables[r].end() && it->second) rels[r].push_back(v);
            int p = m - 1;
            while (p >= 0 && v[p] == n - 1) v[p--] = 0;
            if (p < 0) break;
            ++v[p];
        }
    }
    return make_structure(t.signature, n, std::move(rels));
}

RelStructure amc_multichain(const AMCTemplate& t, int l) {
    const int n = t.f_size + l * t.k_size;
    Signature sig;
    sig.arities = {2, 2};
    for (int i = 0; i < t.k_size; ++i) sig.arities.push_back(1);
    for (int j = 0; j < t.f_size; ++j) sig.arities.push_back(1);
    std::vector<std::vector<Tuple>> rels(sig.arities.size());
    // reflexive order: F-constants first, then pairs in (level, column) order
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) rels[0].push_back({u, v});
    // level equivalence: F elements are singletons, pairs grouped per level
    for (int u = 0; u < n; ++u) rels[1].push_back({u, u});
    for (int level = 0; level < l; ++level)
        for (int i = 0; i < t.k_size; ++i)
            for (int j = 0; j < t.k_size; ++j)
                if (i != j)
                    rels[1].push_back({t.f_size + level * t.k_size + i,
                                       t.f_size + level * t.k_size + j});
    for (int i = 0; i < t.k_size; ++i)
        for (int level = 0; level < l; ++level)
            rels[2 + i].push_back({t.f_size + level * t.k_size + i});
    for (int j = 0; j < t.f_size; ++j) rels[2 + t.k_size + j].push_back({j});
    return make_structure(std::move(sig), n, std::move(rels));
}

AMCTemplate ordered_halfgraph_template(int columns) {
    if (columns < 2) throw RangeError("ordered_halfgraph_template needs >= 2 columns");
    AMCTemplate t;
    t.signature.arities = {2, 2};
    t.f_size = 0;
    t.k_size = columns;
    t.tables.resize(2);
    auto key = [](int r1, int k1, int r2, int k2) {
        return "L" + std::to_string(r1) + "K" + std::to_string(k1) + ",L" +
               std::to_string(r2) + "K" + std::to_string(k2);
    };
    // relation 0: the reflexive lexicographic order on (level, column)
    for (int k1 = 0; k1 < columns; ++k1)
        for (int k2 = 0; k2 < columns; ++k2) {
            if (k1 <= k2) t.tables[0][key(0, k1, 0, k2)] = true;
            t.tables[0][key(0, k1, 1, k2)] = true;
        }
    // relation 1: column 0 joined to the last column by the half-graph rule
    const int last = columns - 1;
    t.tables[1][key(0, 0, 0, last)] = true;
    t.tables[1][key(0, last, 0, 0)] = true;
    t.tables[1][key(0, 0, 1, last)] = true;
    t.tables[1][key(1, last, 0, 0)] = true;
    return t;
}

RelStructure lex_sum(const RelStructure& h, const std::vector<LexPart>& parts) {
    if (!is_graph(h)) throw NotAGraph("lex_sum index must be a loopless graph");
    if (static_cast<int>(parts.size()) != h.domain_size)
        throw SizeMismatch("one part per index vertex required");
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size < 0) throw SizeMismatch("negative part size");
        offset[i + 1] = offset[i] + parts[i].size;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].clique)
            for (int a = 0; a < parts[i].size; ++a)
                for (int b = a + 1; b < parts[i].size; ++b)
                    edges.emplace_back(offset[i] + a, offset[i] + b);
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (h.adj(0, static_cast<int>(i), static_cast<int>(j)))
                for (int a = 0; a < parts[i].size; ++a)
                    for (int b = 0; b < parts[j].size; ++b)
                        edges.emplace_back(offset[i] + a, offset[j] + b);
    }
    return make_graph(offset.back(), edges);
}

FamilyGenerator FamilyGenerator::ten(int i) {
    if (i < 1 || i > 10) throw RangeError("ten-graph index must be in 1..10");
    FamilyGenerator f;
    f.kind_ = Kind::Ten;
    f.ten_index_ = i;
    f.name_ = "G" + std::to_string(i);
    return f;
}

FamilyGenerator FamilyGenerator::half_graph() {
    FamilyGenerator f = ten(2);
    f.name_ = "halfgraph";
    return f;
}

FamilyGenerator FamilyGenerator::amc(AMCTemplate t, std::string name) {
    FamilyGenerator f;
    f.kind_ = Kind::Amc;
    f.template_ = std::move(t);
    f.name_ = std::move(name);
    return f;
}

FamilyGenerator FamilyGenerator::lex(RelStructure h, std::vector<LexFamilyPart> parts,
                                     std::string name) {
    if (!is_graph(h)) throw NotAGraph("lexsum index must be a loopless graph");
    if (static_cast<int>(parts.size()) != h.domain_size)
        throw SizeMismatch("one part per index vertex required");
    FamilyGenerator f;
    f.kind_ = Kind::Lex;
    f.base_ = std::move(h);
    f.lex_parts_ = std::move(parts);
    f.name_ = std::move(name);
    return f;
}

FamilyGenerator FamilyGenerator::direct_sum(RelStructure summand, std::string name) {
    if (!is_graph(summand)) throw NotAGraph("direct_sum summand must be a loopless graph");
    FamilyGenerator f;
    f.kind_ = Kind::Direct;
    f.base_ = std::move(summand);
    f.name_ = std::move(name);
    return f;
}

RelStructure FamilyGenerator::prefix(int l) const {
    if (l < 0) throw RangeError("negative prefix length");
    switch (kind_) {
        case Kind::Ten:
            return l == 0 ? make_graph(0, {}) : ten_graph(ten_index_, l);
        case Kind::Amc:
            return amc_build(template_, l);
        case Kind::Lex: {
            // slots in (level, part) order so earlier prefixes are literal
            // restrictions of later ones
            const int parts = static_cast<int>(lex_parts_.size());
            std::vector<std::vector<int>> ids(parts);
            int n = 0;
            for (int level = 0; level < l; ++level)
                for (int p = 0; p < parts; ++p) {
                    if (lex_parts_[p].cap && level >= *lex_parts_[p].cap) continue;
                    ids[p].push_back(n++);
                }
            std::vector<std::pair<int, int>> edges;
            for (int p = 0; p < parts; ++p) {
                if (lex_parts_[p].clique)
                    for (std::size_t a = 0; a < ids[p].size(); ++a)
                        for (std::size_t b = a + 1; b < ids[p].size(); ++b)
                            edges.emplace_back(ids[p][a], ids[p][b]);
                for (int q = p + 1; q < parts; ++q)
                    if (base_.adj(0, p, q))
                        for (int a : ids[p])
                            for (int b : ids[q]) edges.emplace_back(a, b);
            }
            return make_graph(n, edges);
        }
        case Kind::Direct: {
            const int k = base_.domain_size;
            std::vector<std::pair<int, int>> edges;
            for (int level = 0; level < l; ++level)
                for (const auto& t : base_.relations[0])
                    if (t[0] < t[1]) edges.emplace_back(level * k + t[0], level * k + t[1]);
            return make_graph(l * k, edges);
        }
    }
    throw RangeError("unreachable");
}

bool FamilyGenerator::bounded() const {
    if (kind_ != Kind::Lex) return false;
    for (const auto& p : lex_parts_)
        if (!p.cap) return false;
    return true;
}

bool FamilyGenerator::graph_family() const { return is_graph(prefix(2)); }

FamilyGenerator parse_family(const std::string& descriptor) {
    if (descriptor == "halfgraph") return FamilyGenerator::half_graph();
    if (descriptor.size() >= 2 && descriptor[0] == 'G') {
        try {
            std::size_t used = 0;
            const int i = std::stoi(descriptor.substr(1), &used);
            if (used == descriptor.size() - 1 && i >= 1 && i <= 10)
                return FamilyGenerator::ten(i);
        } catch (const std::logic_error&) {
        }
        throw ParseError("unknown family '" + descriptor + "'");
    }
    if (descriptor.rfind("amc:", 0) == 0) {
        const std::string path = descriptor.substr(4);
        return FamilyGenerator::amc(load_amc_template(path), descriptor);
    }
    if (descriptor.rfind("lexsum:", 0) == 0) {
        const auto rest = descriptor.substr(7);
        const auto sep = rest.rfind(':');
        if (sep == std::string::npos) throw ParseError("lexsum needs <h-file>:<parts>");
        RelStructure h = load_structure(rest.substr(0, sep));
        std::vector<FamilyGenerator::LexFamilyPart> parts;
        std::stringstream ps(rest.substr(sep + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            if (tok.empty()) throw ParseError("empty lexsum part");
            FamilyGenerator::LexFamilyPart part;
            const char kind = tok.back();
            if (kind != 'c' && kind != 'i') throw ParseError("lexsum part must end in c or i");
            part.clique = kind == 'c';
            if (tok.size() > 1) {
                try {
                    part.cap = std::stoi(tok.substr(0, tok.size() - 1));
                } catch (const std::logic_error&) {
                    throw ParseError("bad lexsum part '" + tok + "'");
                }
                if (*part.cap < 0) throw ParseError("negative lexsum part cap");
            }
            parts.push_back(part);
        }
        return FamilyGenerator::lex(std::move(h), std::move(parts), descriptor);
    }
    throw ParseError("unknown family '" + descriptor + "'");
}

std::vector<int> obstruction_search(const FamilyGenerator& family, int l, int t) {
    if (!family.graph_family()) throw NotAGraphFamily("obstruction search needs a graph family");
    if (t < 1 || t > l) throw RangeError("target must satisfy 1 <= t <= l");
    const RelStructure host = family.prefix(l);
    std::vector<int> hits;
    for (int i = 1; i <= 10; ++i)
        if (embeds(ten_graph(i, t), host)) hits.push_back(i);
    return hits;
}

AlphabetOrder AlphabetOrder::equality(const std::string& letters) {
    AlphabetOrder o;
    for (char c : letters) {
        o.letters.insert(c);
        o.leq.emplace(c, c);
    }
    return o;
}

AlphabetOrder AlphabetOrder::chain(const std::string& letters_in_order) {
    AlphabetOrder o;
    for (char c : letters_in_order) o.letters.insert(c);
    for (std::size_t i = 0; i < letters_in_order.size(); ++i)
        for (std::size_t j = i; j < letters_in_order.size(); ++j)
            o.leq.emplace(letters_in_order[i], letters_in_order[j]);
    return o;
}

bool AlphabetOrder::less_equal(char a, char b) const { return leq.count({a, b}) > 0; }

bool higman_leq(const std::string& v, const std::string& w, const AlphabetOrder& order) {
    for (char c : v)
        if (!order.letters.count(c)) throw UnknownLetter(std::string("letter '") + c + "'");
    for (char c : w)
        if (!order.letters.count(c)) throw UnknownLetter(std::string("letter '") + c + "'");
    std::size_t i = 0;
    for (char c : w) {
        if (i < v.size() && order.less_equal(v[i], c)) ++i;
    }
    return i == v.size();
}

}  // namespace strucprof
