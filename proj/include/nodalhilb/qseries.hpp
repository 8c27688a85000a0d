#ifndef NODALHILB_QSERIES_HPP
#define NODALHILB_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nodalhilb/errors.hpp>
#include <nodalhilb/weight_poly.hpp>

namespace nodalhilb
{

// Power series in q with WeightPoly coefficients, truncated after q^order.
// Binary operations truncate to the smaller of the two orders; nothing
// ever extends precision.
class QSeries
{
public:
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    // Leading coefficients; padded with zeros or cut to order + 1 terms.
    QSeries(std::size_t order, std::vector<WeightPoly> leading) : coeffs_(std::move(leading))
    {
        coeffs_.resize(order + 1);
    }

    static QSeries one(std::size_t order)
    {
        QSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const WeightPoly> coeffs() const noexcept { return coeffs_; }

    const WeightPoly &coefficient(std::size_t m) const
    {
        if (m > order()) {
            throw OrderExceeded("coefficient q^" + std::to_string(m) + " requested from a series of order "
                                + std::to_string(order()));
        }
        return coeffs_[m];
    }

    friend QSeries operator+(const QSeries &a, const QSeries &b)
    {
        QSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return r;
    }

    friend QSeries operator-(const QSeries &a, const QSeries &b)
    {
        QSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return r;
    }

    // Truncated Cauchy product.
    friend QSeries operator*(const QSeries &a, const QSeries &b)
    {
        QSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            WeightPoly acc;
            for (std::size_t i = 0; i <= n; ++i) {
                if (!a.coeffs_[i].is_zero() && !b.coeffs_[n - i].is_zero()) {
                    acc += a.coeffs_[i] * b.coeffs_[n - i];
                }
            }
            r.coeffs_[n] = std::move(acc);
        }
        return r;
    }

    friend bool operator==(const QSeries &, const QSeries &) = default;

    // Multiplicative inverse; the constant term must be a unit of Z[L].
    QSeries inverse() const
    {
        const WeightPoly &c0 = coeffs_[0];
        if (c0 != WeightPoly(1) && c0 != WeightPoly(-1)) {
            throw NonUnitConstantTerm();
        }
        // c0 is its own inverse.
        QSeries b(order());
        b.coeffs_[0] = c0;
        for (std::size_t n = 1; n <= order(); ++n) {
            WeightPoly acc;
            for (std::size_t k = 1; k <= n; ++k) {
                if (!coeffs_[k].is_zero() && !b.coeffs_[n - k].is_zero()) {
                    acc += coeffs_[k] * b.coeffs_[n - k];
                }
            }
            b.coeffs_[n] = -(c0 * acc);
        }
        return b;
    }

    QSeries pow(unsigned long long n) const
    {
        QSeries result = one(order());
        QSeries base = *this;
        while (n != 0) {
            if (n & 1u) {
                result = result * base;
            }
            n >>= 1u;
            if (n != 0) {
                base = base * base;
            }
        }
        return result;
    }

private:
    std::vector<WeightPoly> coeffs_;
};

inline void to_json(nlohmann::json &j, const QSeries &s)
{
    j = nlohmann::json::array();
    for (const auto &c : s.coeffs()) {
        j.push_back(c);
    }
}

inline std::string to_string(const QSeries &s)
{
    std::string out = "[";
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += to_string(s.coeffs()[i]);
    }
    return out + "]";
}

} // namespace nodalhilb

#endif
