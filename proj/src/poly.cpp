#include "webworlds/poly.hpp"

#include <sstream>

namespace webworlds {

Int parse_int(const std::string& s) {
    if (s.empty())
        throw InvalidInput("empty integer literal");
    std::size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (pos == s.size())
        throw InvalidInput("bad integer literal '" + s + "'");
    for (std::size_t k = pos; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw InvalidInput("bad integer literal '" + s + "'");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw InvalidInput("zero denominator in '" + s + "'");
    return Rat(num, den);
}

std::string int_string(const Int& v) { return v.str(); }

std::string rat_string(const Rat& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string rat_pretty(const Rat& v) {
    if (denominator(v) == 1)
        return numerator(v).str();
    return rat_string(v);
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::constant(Int c) { return Poly(std::vector<Int>{std::move(c)}); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(long k, Int coeff) {
    if (k < 0)
        throw InvalidInput("negative exponent");
    std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

Int Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size()))
        return Int(0);
    return c_[static_cast<std::size_t>(k)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Int& s) {
    for (auto& v : c_)
        v *= s;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

std::string coeff_list(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = 0; k <= p.degree(); ++k) {
        if (k)
            out += ',';
        out += p.coeff(k).str();
    }
    return out;
}

Poly poly_from_coeff_list(const std::string& s) {
    std::vector<Int> c;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        // tolerate surrounding blanks
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw InvalidInput("empty coefficient in '" + s + "'");
        c.push_back(parse_int(item.substr(b, e - b + 1)));
    }
    if (c.empty())
        throw InvalidInput("empty coefficient list");
    return Poly(std::move(c));
}

std::string poly_pretty(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = 0; k <= p.degree(); ++k) {
        Int c = p.coeff(k);
        if (c == 0)
            continue;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        if (k == 0)
            out += mag.str();
        else {
            if (mag != 1)
                out += mag.str();
            out += "x";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace webworlds
