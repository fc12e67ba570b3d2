#include "strucprof/invariance.hpp"

#include <algorithm>

#include "strucprof/subsets.hpp"

namespace strucprof {

int ChainMap::at(const std::vector<int>& args) const {
    const auto it = values.find(args);
    if (it == values.end()) throw RangeError("chain map undefined on given tuple");
    return it->second;
}

namespace {

// Order type of a list of increasing tuples: each chain element replaced by
// its rank among the distinct elements used.
std::vector<int> order_type(const std::vector<const std::vector<int>*>& tuples) {
    std::vector<int> all;
    for (const auto* t : tuples) all.insert(all.end(), t->begin(), t->end());
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> key;
    key.reserve(all.size() + tuples.size());
    for (const auto* t : tuples) {
        for (int x : *t)
            key.push_back(static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
        key.push_back(-1);
    }
    return key;
}

// All increasing a-tuples over 0..len-1.
std::vector<std::vector<int>> increasing_tuples(int len, int a) {
    std::vector<std::vector<int>> out;
    for_each_subset_of_size(len, a, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

}  // namespace

bool is_invariant(const InvariantTriple& t) {
    const int nmaps = static_cast<int>(t.maps.size());
    std::vector<std::vector<std::vector<int>>> args(nmaps);
    for (int i = 0; i < nmaps; ++i)
        args[i] = increasing_tuples(t.chain_length, t.maps[i].arity);

    // equality patterns of map values (second invariance condition)
    {
        std::map<std::vector<int>, bool> seen;
        for (int i = 0; i < nmaps; ++i)
            for (int j = 0; j < nmaps; ++j)
                for (const auto& a : args[i])
                    for (const auto& b : args[j]) {
                        std::vector<int> key = {i, j};
                        auto ot = order_type({&a, &b});
                        key.insert(key.end(), ot.begin(), ot.end());
                        const bool equal = t.maps[i].at(a) == t.maps[j].at(b);
                        auto [it, inserted] = seen.emplace(std::move(key), equal);
                        if (!inserted && it->second != equal) return false;
                    }
    }

    // relation values among map images (first invariance condition)
    for (int r = 0; r < t.structure.signature.size(); ++r) {
        const int m = t.structure.signature.arities[r];
        std::map<std::vector<int>, bool> seen;
        std::vector<int> choice(m, 0);  // map index per position
        while (true) {
            // iterate argument assignments for this choice of maps
            std::vector<std::size_t> pick(m, 0);
            bool feasible = true;
            for (int p = 0; p < m; ++p)
                if (args[choice[p]].empty()) feasible = false;
            while (feasible) {
                std::vector<const std::vector<int>*> tuples(m);
                Tuple image(m);
                for (int p = 0; p < m; ++p) {
                    tuples[p] = &args[choice[p]][pick[p]];
                    image[p] = t.maps[choice[p]].at(*tuples[p]);
                }
                std::vector<int> key(choice.begin(), choice.end());
                auto ot = order_type(tuples);
                key.insert(key.end(), ot.begin(), ot.end());
                const bool member = t.structure.has_tuple(r, image);
                auto [it, inserted] = seen.emplace(std::move(key), member);
                if (!inserted && it->second != member) return false;
                int p = m - 1;
                while (p >= 0 && pick[p] + 1 == args[choice[p]].size()) pick[p--] = 0;
                if (p < 0) break;
                ++pick[p];
            }
            int p = m - 1;
            while (p >= 0 && choice[p] + 1 == nmaps) choice[p--] = 0;
            if (p < 0) break;
            ++choice[p];
        }
    }
    return true;
}

InvariantTriple restrict_triple(const InvariantTriple& t, const std::vector<int>& a) {
    std::vector<int> sub = a;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (int x : sub)
        if (x < 0 || x >= t.chain_length) throw RangeError("chain element out of range");
    InvariantTriple out;
    out.chain_length = static_cast<int>(sub.size());
    out.structure = t.structure;
    for (const auto& map : t.maps) {
        ChainMap m;
        m.arity = map.arity;
        for_each_subset_of_size(out.chain_length, map.arity, [&](const std::vector<int>& idx) {
            std::vector<int> orig(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) orig[i] = sub[idx[i]];
            m.values[idx] = map.at(orig);
        });
        out.maps.push_back(std::move(m));
    }
    return out;
}

std::optional<std::vector<int>> extract_invariant_subset(const InvariantTriple& t, int target) {
    if (target < 0 || target > t.chain_length)
        throw RangeError("target exceeds the chain length");
    std::optional<std::vector<int>> found;
    for_each_subset_of_size(t.chain_length, target, [&](const std::vector<int>& sub) {
        if (found) return;
        if (is_invariant(restrict_triple(t, sub))) found = sub;
    });
    return found;
}

InvariantTriple amc_invariant_triple(const AMCTemplate& tmpl, int l) {
    InvariantTriple t;
    t.chain_length = l;
    t.structure = amc_build(tmpl, l);
    for (int j = 0; j < tmpl.f_size; ++j) {
        ChainMap m;
        m.arity = 0;
        m.values[{}] = j;
        t.maps.push_back(std::move(m));
    }
    for (int k = 0; k < tmpl.k_size; ++k) {
        ChainMap m;
        m.arity = 1;
        for (int level = 0; level < l; ++level)
            m.values[{level}] = tmpl.f_size + level * tmpl.k_size + k;
        t.maps.push_back(std::move(m));
    }
    return t;
}

}  // namespace strucprof
