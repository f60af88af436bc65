#include "webworlds/words.hpp"

#include <algorithm>
#include <numeric>

#include "webworlds/errors.hpp"
#include "webworlds/polyalg.hpp"

namespace webworlds {

void check_permutation(const Permutation& p) {
    const size_t n = p.one_line.size();
    if (n == 0)
        throw InvalidInput("permutation must be nonempty");
    std::vector<bool> seen(n, false);
    for (int v : p.one_line) {
        if (v < 1 || static_cast<size_t>(v) > n || seen[v - 1])
            throw InvalidInput("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

bool is_indecomposable(const Permutation& p) {
    check_permutation(p);
    const size_t n = p.one_line.size();
    int mx = 0;
    for (size_t j = 0; j + 1 < n; ++j) {
        mx = std::max(mx, p.one_line[j]);
        if (static_cast<size_t>(mx) == j + 1)
            return false;
    }
    return true;
}

std::vector<Permutation> perm_decompose(const Permutation& p) {
    check_permutation(p);
    std::vector<Permutation> blocks;
    int mx = 0;
    size_t start = 0;
    for (size_t j = 0; j < p.one_line.size(); ++j) {
        mx = std::max(mx, p.one_line[j]);
        if (static_cast<size_t>(mx) == j + 1) {
            Permutation block;
            for (size_t i = start; i <= j; ++i)
                block.one_line.push_back(p.one_line[i] - static_cast<int>(start));
            blocks.push_back(std::move(block));
            start = j + 1;
        }
    }
    return blocks;
}

Word word_from_string(const std::string& s) {
    if (s.empty())
        throw InvalidInput("word must be nonempty");
    Word w;
    for (char ch : s) {
        if (ch < 'a' || ch > 'z')
            throw InvalidInput("word letters must be lowercase a..z");
        w.push_back(ch - 'a' + 1);
    }
    return w;
}

std::string word_string(const Word& w) {
    std::string s;
    for (int id : w) {
        if (id < 1 || id > 26)
            throw InvalidInput("letter id out of a..z range");
        s.push_back(static_cast<char>('a' + id - 1));
    }
    return s;
}

Word component_word(const Permutation& p) {
    std::vector<Permutation> blocks = perm_decompose(p);
    std::vector<std::vector<int>> alphabet;
    Word w;
    for (const Permutation& b : blocks) {
        int id = 0;
        for (size_t t = 0; t < alphabet.size(); ++t) {
            if (alphabet[t] == b.one_line) {
                id = static_cast<int>(t) + 1;
                break;
            }
        }
        if (id == 0) {
            alphabet.push_back(b.one_line);
            id = static_cast<int>(alphabet.size());
        }
        w.push_back(id);
    }
    return w;
}

Poly f_word(const Word& w, long guard) {
    const long n = static_cast<long>(w.size());
    if (n == 0)
        throw InvalidInput("word must be nonempty");
    if (n > guard)
        throw GuardExceeded("word length " + std::to_string(n) +
                            " exceeds guard " + std::to_string(guard));
    std::vector<Int> counts(static_cast<size_t>(n) + 1);
    std::vector<int> r(n, 1);
    for (long k = 1; k <= n; ++k) {
        std::fill(r.begin(), r.end(), 1);
        Int hits = 0;
        while (true) {
            unsigned long long used = 0;
            for (int pass : r)
                used |= 1ULL << (pass - 1);
            if (used == (k >= 64 ? ~0ULL : (1ULL << k) - 1)) {
                long pos = 0;
                bool ok = true;
                for (int p = 1; p <= k && ok; ++p)
                    for (long i = 0; i < n && ok; ++i)
                        if (r[i] == p) {
                            if (w[i] != w[pos])
                                ok = false;
                            ++pos;
                        }
                if (ok)
                    ++hits;
            }
            long i = n - 1;
            while (i >= 0 && r[i] == k) {
                r[i] = 1;
                --i;
            }
            if (i < 0)
                break;
            ++r[i];
        }
        counts[k] = hits;
    }
    Poly result;
    for (long k = 1; k <= n; ++k)
        result += Poly::monomial(k, counts[k]);
    return result;
}

WebDiagram two_peg_diagram(const Permutation& p) {
    check_permutation(p);
    std::vector<Edge> edges;
    for (size_t i = 0; i < p.one_line.size(); ++i)
        edges.push_back({1, 2, static_cast<int>(i) + 1, p.one_line[i]});
    return WebDiagram(std::move(edges), 2);
}

Poly two_peg_diagonal(const Permutation& p, long guard) {
    return f_word(component_word(p), guard);
}

Poly two_peg_trace(long n, long guard) {
    if (n < 1)
        throw InvalidInput("trace needs n >= 1");
    if (n > guard)
        throw GuardExceeded("trace size " + std::to_string(n) +
                            " exceeds guard " + std::to_string(guard));
    Permutation p;
    p.one_line.resize(n);
    std::iota(p.one_line.begin(), p.one_line.end(), 1);
    Poly total;
    do {
        total += two_peg_diagonal(p, n);
    } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
    return total;
}

namespace {

Int conjecture_formula(long n) {
    return factorial(n - 2) * Int((n * n - 3 * n + 4)) / 2;
}

} // namespace

ConjectureReport conjecture_report(long n, long guard) {
    if (n < 2)
        throw InvalidInput("conjecture check needs n >= 2");
    ConjectureReport rep;
    rep.n = n;
    rep.a_n = two_peg_trace(n, guard).coeff(n - 1);
    rep.formula_value = conjecture_formula(n);
    rep.match = rep.a_n == rep.formula_value;
    rep.formula_value_shifted = conjecture_formula(n + 1);
    rep.shifted_match = rep.a_n == rep.formula_value_shifted;
    return rep;
}

} // namespace webworlds
