#include "webworlds/decomposition.hpp"

#include <algorithm>
#include <set>

namespace webworlds {

std::vector<Edge> down_closure(const WebDiagram& d, const Edge& e) {
    auto pos = std::find(d.edges().begin(), d.edges().end(), e);
    if (pos == d.edges().end())
        throw InvalidInput("edge not in diagram");
    std::set<Edge> s{e};
    std::vector<int> top(static_cast<std::size_t>(d.n_pegs()), 0);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge& f : s) {
            auto& ta = top[static_cast<std::size_t>(f.a) - 1];
            auto& tb = top[static_cast<std::size_t>(f.b) - 1];
            ta = std::max(ta, f.c);
            tb = std::max(tb, f.d);
        }
        for (const Edge& f : d.edges()) {
            if (s.count(f))
                continue;
            if (f.c <= top[static_cast<std::size_t>(f.a) - 1] ||
                f.d <= top[static_cast<std::size_t>(f.b) - 1]) {
                s.insert(f);
                grew = true;
            }
        }
    }
    return std::vector<Edge>(s.begin(), s.end());
}

std::vector<WebDiagram> decompose(const WebDiagram& d) {
    std::vector<WebDiagram> components;
    WebDiagram work = d;
    while (work.edge_count() > 0) {
        std::set<std::vector<Edge>> closures;
        for (const Edge& e : work.edges())
            closures.insert(down_closure(work, e));
        // inclusion-minimal closures; ties by smallest leading edge, which
        // is the set ordering of the sorted edge lists
        const std::vector<Edge>* pick = nullptr;
        for (const auto& c : closures) {
            bool minimal = true;
            for (const auto& other : closures)
                if (other.size() < c.size() &&
                    std::includes(c.begin(), c.end(), other.begin(),
                                  other.end())) {
                    minimal = false;
                    break;
                }
            if (minimal && !pick)
                pick = &c;
        }
        components.push_back(relabel(*pick, d.n_pegs()));
        std::vector<Edge> rest;
        std::set_difference(work.edges().begin(), work.edges().end(),
                            pick->begin(), pick->end(),
                            std::back_inserter(rest));
        work = relabel(rest, d.n_pegs());
    }
    return components;
}

bool is_indecomposable(const WebDiagram& d) {
    if (d.edge_count() == 0)
        throw InvalidInput("empty diagram has no factorization");
    return decompose(d).size() == 1;
}

Poset::Poset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    std::size_t n = leq_.size();
    for (const auto& row : leq_)
        if (row.size() != n)
            throw InvalidInput("order relation must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i][i])
            throw InvalidInput("order relation must be reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw InvalidInput("order relation must be antisymmetric");
            for (std::size_t k = 0; leq_[i][j] && k < n; ++k)
                if (leq_[j][k] && !leq_[i][k])
                    throw InvalidInput("order relation must be transitive");
        }
    }
}

Poset Poset::from_strict_pairs(
    long size, const std::vector<std::pair<long, long>>& strict) {
    if (size < 0)
        throw InvalidInput("negative poset size");
    std::vector<std::vector<bool>> leq(
        static_cast<std::size_t>(size),
        std::vector<bool>(static_cast<std::size_t>(size), false));
    for (long i = 0; i < size; ++i)
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [i, j] : strict) {
        if (i < 0 || j < 0 || i >= size || j >= size)
            throw InvalidInput("pair out of range");
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
    for (long k = 0; k < size; ++k)
        for (long i = 0; i < size; ++i)
            for (long j = 0; j < size; ++j)
                if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                        k)] &&
                    leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(
                        j)])
                    leq[static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(j)] = true;
    return Poset(std::move(leq)); // antisymmetry checked there
}

namespace {

Poset poset_of_components(const std::vector<WebDiagram>& comps) {
    long k = static_cast<long>(comps.size());
    std::vector<std::vector<int>> pegs;
    pegs.reserve(comps.size());
    for (const auto& c : comps)
        pegs.push_back(peg_set(c));
    std::vector<std::pair<long, long>> strict;
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j) {
            std::vector<int> meet;
            std::set_intersection(
                pegs[static_cast<std::size_t>(i)].begin(),
                pegs[static_cast<std::size_t>(i)].end(),
                pegs[static_cast<std::size_t>(j)].begin(),
                pegs[static_cast<std::size_t>(j)].end(),
                std::back_inserter(meet));
            if (!meet.empty())
                strict.push_back({i, j});
        }
    return Poset::from_strict_pairs(k, strict);
}

} // namespace

Poset decomposition_poset(const WebDiagram& d) {
    if (d.edge_count() == 0)
        throw InvalidInput("empty diagram has no factorization");
    return poset_of_components(decompose(d));
}

CompGraph comparability_graph(const Poset& p) {
    std::size_t n = static_cast<std::size_t>(p.size());
    CompGraph g{std::vector<std::vector<bool>>(n,
                                               std::vector<bool>(n, false))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (p.leq(static_cast<long>(i), static_cast<long>(j)) ||
                           p.leq(static_cast<long>(j), static_cast<long>(i))))
                g.adj[i][j] = true;
    return g;
}

std::string comp_graph_canonical_key(const CompGraph& g) {
    std::size_t n = g.adj.size();
    if (n > 9)
        throw GuardExceeded("canonical key limited to 9 vertices");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::string best;
    do {
        std::string key;
        key.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                key += g.adj[perm[i]][perm[j]] ? '1' : '0';
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

Int count_order_maps(const Poset& p, long l, unsigned long long guard,
                     bool surjective_only) {
    if (l < 1)
        throw InvalidInput("codomain size must be positive");
    long k = p.size();
    if (surjective_only && l > k)
        return Int(0);
    if (k == 0)
        return Int(1); // the empty map
    Int candidates = 1;
    for (long v = 0; v < k; ++v)
        candidates *= l;
    if (candidates > Int(guard))
        throw GuardExceeded("order map enumeration would try " +
                            candidates.str() + " maps (limit " +
                            std::to_string(guard) + ")");
    std::vector<std::pair<long, long>> constraints;
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            if (i != j && p.leq(i, j))
                constraints.push_back({i, j});
    std::vector<int> f(static_cast<std::size_t>(k), 1);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (auto [i, j] : constraints)
            if (f[static_cast<std::size_t>(i)] >
                f[static_cast<std::size_t>(j)]) {
                ok = false;
                break;
            }
        if (ok && surjective_only) {
            unsigned long long seen = 0;
            for (int v : f)
                seen |= 1ULL << (v - 1);
            ok = seen == (l >= 64 ? ~0ULL : (1ULL << l) - 1);
        }
        if (ok)
            ++count;
        long pos = 0;
        for (; pos < k; ++pos) {
            if (f[static_cast<std::size_t>(pos)] < l) {
                ++f[static_cast<std::size_t>(pos)];
                break;
            }
            f[static_cast<std::size_t>(pos)] = 1;
        }
        if (pos == k)
            break;
    }
    return count;
}

} // namespace

Int omega(const Poset& p, long l, unsigned long long guard) {
    return count_order_maps(p, l, guard, false);
}

Int theta(const Poset& p, long l, unsigned long long guard) {
    return count_order_maps(p, l, guard, true);
}

Poly diagonal_poly_via_poset(const WebDiagram& d, unsigned long long guard) {
    if (d.edge_count() == 0)
        throw InvalidInput("empty diagram has no factorization");
    std::vector<WebDiagram> comps = decompose(d);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (comps[i] == comps[j])
                throw InvalidInput(
                    "diagonal formula needs pairwise distinct components");
    Poset p = poset_of_components(comps);
    Poly out;
    for (long l = 1; l <= p.size(); ++l)
        out += Poly::monomial(l, theta(p, l, guard));
    return out;
}

} // namespace webworlds
