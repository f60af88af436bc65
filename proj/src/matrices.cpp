#include "webworlds/matrices.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace webworlds {

ColouringMatrix colouring_matrix(const WebWorld& w, unsigned long long guard) {
    std::size_t n = static_cast<std::size_t>(w.size());
    PolyMatrix entries(n, std::vector<Poly>(n));
    long m = w.graph().total_label();
    if (m == 0) {
        // one empty diagram; its only colouring is the empty one
        entries[0][0] = Poly::constant(Int(1));
        return {w, std::move(entries)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        const WebDiagram& d = w.diagrams()[i];
        for (long l = 1; l <= m; ++l)
            for (const auto& [d2, cnt] :
                 reconstruction_distribution(d, l, guard))
                entries[i][static_cast<std::size_t>(w.index_of(d2))] +=
                    Poly::monomial(l, cnt);
    }
    return {w, std::move(entries)};
}

MixingMatrix mixing_matrix_of(const ColouringMatrix& m) {
    std::size_t n = m.entries.size();
    std::vector<std::vector<Rat>> entries(n, std::vector<Rat>(n, Rat(0)));
    if (m.world.graph().total_label() > 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                entries[i][j] = mixing_transform(m.entries[i][j]);
    return {m.world, std::move(entries)};
}

MixingMatrix mixing_matrix(const WebWorld& w, unsigned long long guard) {
    return mixing_matrix_of(colouring_matrix(w, guard));
}

PolyMatrix matrix_square(const ColouringMatrix& m) {
    std::size_t n = m.entries.size();
    PolyMatrix out(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (m.entries[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (m.entries[k][j].is_zero())
                    continue;
                out[i][j] += m.entries[i][k] * m.entries[k][j];
            }
        }
    return out;
}

PolyMatrix matrix_square_via_L(const ColouringMatrix& m) {
    long top = 0;
    for (const auto& row : m.entries)
        for (const Poly& p : row)
            top = std::max(top, p.degree());
    std::vector<Poly> l_table;
    for (long i = 0; i <= top; ++i)
        l_table.push_back(l_series(i));
    std::size_t n = m.entries.size();
    PolyMatrix out(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Poly& p = m.entries[i][j];
            for (long k = 0; k <= p.degree(); ++k) {
                Int z = p.coeff(k);
                if (z != 0)
                    out[i][j] += l_table[static_cast<std::size_t>(k)] * z;
            }
        }
    return out;
}

IdempotencyReport verify_idempotent(const MixingMatrix& r) {
    using boost::multiprecision::lcm;
    std::size_t n = r.entries.size();
    Int den = 1;
    for (const auto& row : r.entries)
        for (const Rat& v : row)
            den = lcm(den, denominator(v));
    // scale to integers: with N = den*R, idempotency reads N*N == den*N
    std::vector<std::vector<Int>> scaled(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = r.entries[i][j] * den;
            scaled[i][j] = numerator(v);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc += scaled[i][k] * scaled[k][j];
            if (acc != den * scaled[i][j])
                return {false, static_cast<long>(i), static_cast<long>(j),
                        r.entries[i][j], Rat(acc, den * den)};
        }
    return {true, -1, -1, Rat(0), Rat(0)};
}

Poly combine_disjoint_entries(const std::vector<Poly>& entries) {
    return black_diamond(entries);
}

Poly trace(const ColouringMatrix& m) {
    Poly t;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        t += m.entries[i][i];
    return t;
}

} // namespace webworlds
