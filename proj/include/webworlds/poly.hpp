#pragma once

#include <string>
#include <vector>

#include "webworlds/numbers.hpp"

namespace webworlds {

/* Univariate polynomial over Int, dense, constant term first.
 * The coefficient vector never has trailing zeros, so representation
 * equality is polynomial equality. */
class Poly {
public:
    Poly() = default; // zero polynomial
    explicit Poly(std::vector<Int> coeffs);

    static Poly constant(Int c);
    static Poly x(); // the monomial x
    static Poly monomial(long k, Int coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Int coeff(long k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Int& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Int& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, const Int& s) { return a *= s; }
    Poly operator-() const;

private:
    void trim();
    std::vector<Int> c_;
};

// "0,1,7,12,6"; the zero polynomial prints as "0"
std::string coeff_list(const Poly& p);
Poly poly_from_coeff_list(const std::string& s);

// "x+2x^2", "-x^3", "0"
std::string poly_pretty(const Poly& p);

} // namespace webworlds
