#ifndef NODALHILB_WEIGHT_POLY_HPP
#define NODALHILB_WEIGHT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace nodalhilb
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the vanishing convention: zero unless 0 <= k <= n.
inline Integer binom(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Polynomial in L (the class of the affine line) with arbitrary-precision
// integer coefficients, lowest degree first. Always canonical: no trailing
// zeros, so the zero polynomial has no coefficients and equality is
// structural.
class WeightPoly
{
public:
    WeightPoly() = default;
    WeightPoly(long long c) : coeffs_{Integer(c)} { normalize(); }
    WeightPoly(Integer c) : coeffs_{std::move(c)} { normalize(); }
    WeightPoly(std::initializer_list<long long> cs)
    {
        coeffs_.reserve(cs.size());
        for (auto c : cs) {
            coeffs_.emplace_back(c);
        }
        normalize();
    }
    explicit WeightPoly(std::vector<Integer> cs) : coeffs_(std::move(cs)) { normalize(); }

    // c * L^k
    static WeightPoly monomial(Integer c, std::size_t k)
    {
        std::vector<Integer> cs(k + 1);
        cs[k] = std::move(c);
        return WeightPoly(std::move(cs));
    }
    static WeightPoly L(std::size_t k = 1) { return monomial(1, k); }

    // 1 + L + ... + L^n; zero when n < 0.
    static WeightPoly geometric(long long n)
    {
        if (n < 0) {
            return {};
        }
        return WeightPoly(std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(1)));
    }

    const std::vector<Integer> &coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }

    Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    WeightPoly &operator+=(const WeightPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    WeightPoly &operator-=(const WeightPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    WeightPoly &operator*=(const WeightPoly &o) { return *this = *this * o; }

    friend WeightPoly operator+(WeightPoly a, const WeightPoly &b) { return a += b; }
    friend WeightPoly operator-(WeightPoly a, const WeightPoly &b) { return a -= b; }
    friend WeightPoly operator-(WeightPoly a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend WeightPoly operator*(const WeightPoly &a, const WeightPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return WeightPoly(std::move(r));
    }

    friend bool operator==(const WeightPoly &, const WeightPoly &) = default;

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Integer> coeffs_;
};

// Specialization L -> 1 (Euler characteristic).
inline Integer eval_at_one(const WeightPoly &p)
{
    Integer s = 0;
    for (const auto &c : p.coeffs()) {
        s += c;
    }
    return s;
}

// Descending powers, "L^k" tokens, unit coefficients elided, "0" for zero.
// Example: L^2 - 3L + 1.
inline std::string to_string(const WeightPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto i = p.degree(); i >= 0; --i) {
        const Integer &c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) {
            out += mag.str();
        }
        out += "L";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const WeightPoly &p) { return os << to_string(p); }

// JSON form: array of decimal coefficient strings, lowest degree first.
inline void to_json(nlohmann::json &j, const WeightPoly &p)
{
    j = nlohmann::json::array();
    for (const auto &c : p.coeffs()) {
        j.push_back(c.str());
    }
}

inline void from_json(const nlohmann::json &j, WeightPoly &p)
{
    std::vector<Integer> cs;
    for (const auto &e : j) {
        cs.emplace_back(e.get<std::string>());
    }
    p = WeightPoly(std::move(cs));
}

} // namespace nodalhilb

#endif
