#include "webworlds/polyalg.hpp"

#include <algorithm>
#include <numeric>

namespace webworlds {

Int factorial(long n) {
    if (n < 0)
        throw InvalidInput("factorial of negative argument");
    Int r = 1;
    for (long v = 2; v <= n; ++v)
        r *= v;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return Int(0);
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long v = 1; v <= k; ++v) {
        r *= n - k + v;
        r /= v; // exact at every step
    }
    return r;
}

Int multinomial(long n, const std::vector<long>& parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0)
            return Int(0);
        sum += p;
    }
    if (sum != n)
        throw InvalidInput("multinomial parts do not sum to n");
    Int r = 1;
    long rest = n;
    for (long p : parts) {
        r *= binomial(rest, p);
        rest -= p;
    }
    return r;
}

Int stirling(long n, long k, StirlingKind kind) {
    if (n < 0 || k < 0)
        throw InvalidInput("stirling arguments must be nonnegative");
    if (k > n)
        return Int(0);
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(0));
    row[0] = 1; // n = 0 row
    for (long r = 1; r <= n; ++r) {
        for (long c = std::min(r, k); c >= 1; --c) {
            Int above = row[static_cast<std::size_t>(c)];
            Int diag = row[static_cast<std::size_t>(c) - 1];
            row[static_cast<std::size_t>(c)] =
                kind == StirlingKind::second ? diag + Int(c) * above
                                             : diag + Int(r - 1) * above;
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

Poly fubini(long n) {
    if (n < 0)
        throw InvalidInput("fubini of negative argument");
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    for (long k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] =
            factorial(k) * stirling(n, k, StirlingKind::second);
    return Poly(std::move(c));
}

namespace {

/* Dense multivariate polynomial truncated at per-variable exponent caps,
 * mixed-radix indexed. Big enough for desk scale: the diamond operands
 * here have a handful of variables with single-digit degrees. */
struct TruncPoly {
    std::vector<long> cap;
    std::vector<long> stride;
    std::vector<Int> c;

    explicit TruncPoly(std::vector<long> caps) : cap(std::move(caps)) {
        long n = 1;
        stride.resize(cap.size());
        for (std::size_t j = 0; j < cap.size(); ++j) {
            stride[j] = n;
            n *= cap[j] + 1;
        }
        c.assign(static_cast<std::size_t>(n), Int(0));
    }

    std::vector<long> decode(long idx) const {
        std::vector<long> e(cap.size());
        for (std::size_t j = cap.size(); j-- > 0;) {
            e[j] = idx / stride[j];
            idx %= stride[j];
        }
        return e;
    }
};

TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r(a.cap);
    long n = static_cast<long>(a.c.size());
    for (long ia = 0; ia < n; ++ia) {
        if (a.c[static_cast<std::size_t>(ia)] == 0)
            continue;
        std::vector<long> ea = a.decode(ia);
        for (long ib = 0; ib < n; ++ib) {
            if (b.c[static_cast<std::size_t>(ib)] == 0)
                continue;
            std::vector<long> eb = b.decode(ib);
            long idx = 0;
            bool fits = true;
            for (std::size_t j = 0; j < r.cap.size(); ++j) {
                long e = ea[j] + eb[j];
                if (e > r.cap[j]) {
                    fits = false;
                    break;
                }
                idx += e * r.stride[j];
            }
            if (fits)
                r.c[static_cast<std::size_t>(idx)] +=
                    a.c[static_cast<std::size_t>(ia)] *
                    b.c[static_cast<std::size_t>(ib)];
        }
    }
    return r;
}

// (1+u_1)...(1+u_m) - 1 truncated at caps (every cap >= 1 here)
TruncPoly diamond_base(const std::vector<long>& caps) {
    TruncPoly base(caps);
    long m = static_cast<long>(caps.size());
    for (long mask = 1; mask < (1L << m); ++mask) {
        long idx = 0;
        for (long j = 0; j < m; ++j)
            if (mask & (1L << j))
                idx += base.stride[static_cast<std::size_t>(j)];
        base.c[static_cast<std::size_t>(idx)] = 1;
    }
    return base;
}

TruncPoly trunc_unit(const std::vector<long>& caps) {
    TruncPoly t(caps);
    t.c[0] = 1;
    return t;
}

} // namespace

Int s_count(long k, const std::vector<long>& i) {
    if (k < 0)
        throw InvalidInput("s_count needs nonnegative k");
    for (long v : i)
        if (v < 0)
            throw InvalidInput("s_count row sums must be nonnegative");
    if (i.empty())
        return k == 0 ? Int(1) : Int(0);
    long total = std::accumulate(i.begin(), i.end(), 0L);
    long mx = *std::max_element(i.begin(), i.end());
    // each factor raises the total degree by at least 1 and each single
    // exponent by at most 1
    if (k > total || k < mx)
        return Int(0);
    std::vector<long> caps = i;
    for (long& v : caps)
        v = std::max(v, 1L);
    TruncPoly base = diamond_base(caps);
    TruncPoly t = trunc_unit(caps);
    for (long step = 0; step < k; ++step)
        t = trunc_mul(t, base);
    long idx = 0;
    for (std::size_t j = 0; j < i.size(); ++j)
        idx += i[j] * t.stride[j];
    return t.c[static_cast<std::size_t>(idx)];
}

Int s_count_closed(long k, const std::vector<long>& i) {
    switch (i.size()) {
    case 1:
        // a single row must put a one in every column
        return i[0] == k ? Int(1) : Int(0);
    case 2: {
        std::vector<long> parts{k - i[0], k - i[1], i[0] + i[1] - k};
        for (long p : parts)
            if (p < 0)
                return Int(0);
        return multinomial(k, parts);
    }
    case 3: {
        Int sum = 0;
        for (long a = 0; a <= i[1]; ++a)
            sum += binomial(i[0], a) * binomial(k - i[0], i[1] - a) *
                   binomial(i[0] + i[1] - a, k - i[2]);
        return binomial(k, i[0]) * sum;
    }
    default:
        throw InvalidInput("closed form only for up to three rows");
    }
}

Int n_count(long r, long m, long n) {
    if (r < 0 || m < 1 || n < 1)
        throw InvalidInput("n_count needs r >= 0 and positive dimensions");
    Int sum = 0;
    for (long b = 0; b <= m; ++b) {
        for (long a = 0; a <= n; ++a) {
            Int term = binomial(m, b) * binomial(n, a) * binomial(a * b, r);
            if ((n + m - (b + a)) % 2 != 0)
                sum -= term;
            else
                sum += term;
        }
    }
    return sum;
}

namespace {

bool is_unit(const Poly& p) { return p == Poly::constant(Int(1)); }

void check_diamond_operand(const Poly& p) {
    if (p.coeff(0) != 0 && !is_unit(p))
        throw InvalidInput(
            "diamond operand must have zero constant term or be the unit 1");
}

} // namespace

Poly black_diamond(const std::vector<Poly>& ops) {
    if (ops.empty())
        throw InvalidInput("diamond product needs at least one operand");
    std::vector<const Poly*> live;
    for (const Poly& p : ops) {
        check_diamond_operand(p);
        if (is_unit(p))
            continue; // the unit is neutral
        if (p.is_zero())
            return Poly();
        live.push_back(&p);
    }
    if (live.empty())
        return Poly::constant(Int(1));

    std::vector<long> caps;
    caps.reserve(live.size());
    long total = 0;
    for (const Poly* p : live) {
        caps.push_back(p->degree());
        total += p->degree();
    }

    // coefficient-product lookup over all exponent tuples; tuples with a
    // zero coefficient contribute nothing
    TruncPoly probe(caps);
    std::vector<Int> prod(probe.c.size());
    for (long idx = 0; idx < static_cast<long>(prod.size()); ++idx) {
        std::vector<long> e = probe.decode(idx);
        Int v = 1;
        for (std::size_t j = 0; j < live.size(); ++j) {
            v *= live[j]->coeff(e[j]);
            if (v == 0)
                break;
        }
        prod[static_cast<std::size_t>(idx)] = v;
    }

    TruncPoly base = diamond_base(caps);
    TruncPoly t = trunc_unit(caps);
    std::vector<Int> out(static_cast<std::size_t>(total) + 1, Int(0));
    for (long k = 0; k <= total; ++k) {
        Int c = 0;
        for (std::size_t idx = 0; idx < prod.size(); ++idx)
            if (prod[idx] != 0 && t.c[idx] != 0)
                c += prod[idx] * t.c[idx];
        out[static_cast<std::size_t>(k)] = std::move(c);
        if (k < total)
            t = trunc_mul(t, base);
    }
    return Poly(std::move(out));
}

Poly diamond_power(const Poly& a, long m) {
    if (m < 0)
        throw InvalidInput("diamond power needs nonnegative exponent");
    check_diamond_operand(a);
    if (m == 0)
        return Poly::constant(Int(1));
    return black_diamond(std::vector<Poly>(static_cast<std::size_t>(m), a));
}

Poly l_series(long i) {
    if (i < 0)
        throw InvalidInput("l_series index must be nonnegative");
    if (i == 0)
        return Poly::constant(Int(1));
    Poly out;
    for (long j = 1; j <= i; ++j)
        for (long k = 1; k <= i; ++k) {
            Int c = n_count(i, j, k);
            if (c != 0)
                out += Poly::monomial(j + k, c);
        }
    return out;
}

Rat mixing_transform(const Poly& a) {
    if (a.coeff(0) != 0)
        throw InvalidInput("mixing transform needs zero constant term");
    Rat sum = 0;
    for (long k = 1; k <= a.degree(); ++k) {
        Rat term(a.coeff(k), Int(k));
        if (k % 2 == 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Rat inner_sum_identity(long n, long k) {
    if (n < 1 || k < 1)
        throw InvalidInput("inner_sum_identity needs positive arguments");
    Int sum = 0;
    for (long a = 1; a <= n; ++a)
        for (long b = 1; b <= n; ++b) {
            Int term =
                binomial(a * b - 1, k - 1) * binomial(n, a) * binomial(n, b);
            if ((a + b) % 2 != 0)
                sum -= term;
            else
                sum += term;
        }
    return Rat(sum);
}

} // namespace webworlds
