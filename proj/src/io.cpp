#include "strucprof/io.hpp"

#include <fstream>
#include <sstream>

namespace strucprof {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Tuple parse_tuple(const std::string& token, int arity) {
    if (token == "()") {
        if (arity != 0) throw ParseError("empty tuple in relation of arity " + std::to_string(arity));
        return {};
    }
    Tuple t;
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw ParseError("bad vertex '" + part + "'");
            t.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad vertex '" + part + "'");
        }
    }
    return t;
}

}  // namespace

RelStructure parse_structure(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Signature sig;
    int domain = -1;
    bool have_sig = false;
    std::vector<std::vector<Tuple>> rels;
    while (std::getline(in, line)) {
        const std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream ls(body);
        std::string kw;
        ls >> kw;
        if (kw == "signature") {
            if (have_sig) throw ParseError("duplicate signature line");
            int m;
            while (ls >> m) sig.arities.push_back(m);
            if (sig.arities.empty()) throw ParseError("empty signature");
            have_sig = true;
            rels.resize(sig.arities.size());
        } else if (kw == "domain") {
            if (!have_sig) throw ParseError("domain before signature");
            if (!(ls >> domain)) throw ParseError("bad domain line");
        } else if (kw == "rel") {
            if (!have_sig || domain < 0) throw ParseError("rel before signature/domain");
            int idx;
            std::string colon;
            if (!(ls >> idx >> colon) || colon != ":") throw ParseError("bad rel line: " + body);
            if (idx < 0 || idx >= sig.size()) throw ParseError("relation index out of range");
            std::string token;
            while (ls >> token) rels[idx].push_back(parse_tuple(token, sig.arities[idx]));
        } else {
            throw ParseError("unknown keyword '" + kw + "'");
        }
    }
    if (!have_sig || domain < 0) throw ParseError("missing signature or domain");
    return make_structure(std::move(sig), domain, std::move(rels));
}

RelStructure load_structure(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_structure(buf.str());
}

std::string serialize_structure(const RelStructure& s) {
    std::ostringstream out;
    out << "signature";
    for (int m : s.signature.arities) out << ' ' << m;
    out << "\ndomain " << s.domain_size << '\n';
    for (int r = 0; r < s.signature.size(); ++r) {
        if (s.relations[r].empty()) continue;
        out << "rel " << r << " :";
        for (const auto& t : s.relations[r]) {
            out << ' ';
            if (t.empty()) {
                out << "()";
                continue;
            }
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i) out << ',';
                out << t[i];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace strucprof
