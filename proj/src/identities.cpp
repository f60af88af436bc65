#include "webworlds/identities.hpp"

#include <functional>

#include "webworlds/errors.hpp"

namespace webworlds {

void check_diagonal_spec(const DiagonalSpec& spec) {
    if (spec.entries.empty())
        throw InvalidInput("diagonal spec needs at least one entry");
    if (spec.entries.size() != spec.mult.size())
        throw InvalidInput("diagonal spec entry/multiplicity length mismatch");
    for (size_t i = 0; i < spec.entries.size(); ++i) {
        if (spec.mult[i] <= 0)
            throw InvalidInput("diagonal spec multiplicity must be positive");
        if (spec.entries[i].coeff(0) != 0)
            throw InvalidInput("diagonal spec entry has nonzero constant term");
        for (size_t j = i + 1; j < spec.entries.size(); ++j)
            if (spec.entries[i] == spec.entries[j])
                throw InvalidInput("diagonal spec entries must be distinct");
    }
}

DiagonalSpec diagonal_spec_of(const ColouringMatrix& m) {
    DiagonalSpec spec;
    const long n = static_cast<long>(m.entries.size());
    for (long i = 0; i < n; ++i) {
        const Poly& h = m.entries[i][i];
        bool found = false;
        for (size_t t = 0; t < spec.entries.size(); ++t) {
            if (spec.entries[t] == h) {
                ++spec.mult[t];
                found = true;
                break;
            }
        }
        if (!found) {
            spec.entries.push_back(h);
            spec.mult.push_back(1);
        }
    }
    check_diagonal_spec(spec);
    return spec;
}

std::vector<IdentityTerm> identity_terms(const DiagonalSpec& spec, long m) {
    check_diagonal_spec(spec);
    if (m < 2)
        throw InvalidInput("identity terms need m >= 2");
    const size_t s = spec.entries.size();
    std::vector<IdentityTerm> terms;
    std::vector<long> parts(s, 0);
    std::function<void(size_t, long)> rec = [&](size_t pos, long left) {
        if (pos + 1 == s) {
            parts[pos] = left;
            IdentityTerm t;
            t.parts = parts;
            Int w = multinomial(m, parts);
            std::vector<Poly> factors;
            for (size_t i = 0; i < s; ++i) {
                for (long r = 0; r < parts[i]; ++r)
                    factors.push_back(spec.entries[i]);
                Int h(spec.mult[i]);
                for (long r = 0; r < parts[i]; ++r)
                    w *= h;
            }
            t.weight = w;
            t.transformed = mixing_transform(black_diamond(factors));
            t.contribution = Rat(t.weight) * t.transformed;
            terms.push_back(std::move(t));
            return;
        }
        for (long a = 0; a <= left; ++a) {
            parts[pos] = a;
            rec(pos + 1, left - a);
        }
    };
    rec(0, m);
    return terms;
}

Rat identity_sum(const DiagonalSpec& spec, long m) {
    Rat total(0);
    for (const IdentityTerm& t : identity_terms(spec, m))
        total += t.contribution;
    return total;
}

Rat fubini_log_identity(long m) {
    if (m < 2)
        throw InvalidInput("fubini log identity needs m >= 2");
    Rat total(0);
    for (long k = 1; k <= m; ++k) {
        Int term = factorial(k - 1) * stirling(m, k, StirlingKind::second);
        if (k % 2 == 0)
            total -= Rat(term);
        else
            total += Rat(term);
    }
    return total;
}

} // namespace webworlds
