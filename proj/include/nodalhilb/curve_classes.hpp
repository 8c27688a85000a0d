#ifndef NODALHILB_CURVE_CLASSES_HPP
#define NODALHILB_CURVE_CLASSES_HPP

#include <cstddef>
#include <functional>

#include <nodalhilb/qseries.hpp>
#include <nodalhilb/weight_poly.hpp>

// Grothendieck-ring classes of a rational curve with delta nodes and some
// regular points removed, and of its Hilbert and nested Hilbert schemes.

namespace nodalhilb
{

// Rational nodal curve: normalization P^1, `delta` nodes, `punctures`
// regular points removed.
struct CurveSpec {
    unsigned delta = 0;
    unsigned punctures = 0;

    friend bool operator==(const CurveSpec &, const CurveSpec &) = default;
};

// [C_x^[k]] for a node x: k-1 projective lines in a chain.
inline WeightPoly node_punctual_hilb_class(unsigned k)
{
    if (k == 0) {
        return 1;
    }
    return WeightPoly{1, static_cast<long long>(k) - 1};
}

// [C_x^[k,k+1]] for a node x: 2k-1 projective lines in a chain.
inline WeightPoly node_punctual_nested_class(unsigned k)
{
    if (k == 0) {
        return 1;
    }
    return WeightPoly{1, 2 * static_cast<long long>(k) - 1};
}

// Local classes at a node. Everything below is parameterized on this so a
// harness can substitute a deliberately wrong model.
struct LocalModel {
    std::function<WeightPoly(unsigned)> hilb = node_punctual_hilb_class;
    std::function<WeightPoly(unsigned)> nested = node_punctual_nested_class;
};

inline const LocalModel &ran_model()
{
    static const LocalModel model{};
    return model;
}

// [C] = L + 1 - delta - punctures.
inline WeightPoly curve_class(CurveSpec spec)
{
    return WeightPoly{1 - static_cast<long long>(spec.delta) - static_cast<long long>(spec.punctures), 1};
}

// Σ_k q^k [C_x^[k]]
inline QSeries node_local_series(std::size_t order, const LocalModel &model = ran_model())
{
    std::vector<WeightPoly> cs;
    for (std::size_t k = 0; k <= order; ++k) {
        cs.push_back(model.hilb(static_cast<unsigned>(k)));
    }
    return QSeries(order, std::move(cs));
}

// Σ_m q^m [C^[m]] as a product of local factors: the normalization P^1
// contributes 1/((1-q)(1-qL)), each of the 2*delta + punctures regular points
// removed from it contributes (1-q), and each node its local series.
inline QSeries hilb_series(CurveSpec spec, std::size_t order, const LocalModel &model = ran_model())
{
    const QSeries one_minus_q(order, {1, -1});
    const QSeries one_minus_qL(order, {1, -WeightPoly::L()});
    QSeries s = (one_minus_q * one_minus_qL).inverse();
    s = s * one_minus_q.pow(2ull * spec.delta + spec.punctures);
    if (spec.delta != 0) {
        s = s * node_local_series(order, model).pow(spec.delta);
    }
    return s;
}

inline WeightPoly hilb_class(CurveSpec spec, std::size_t m, const LocalModel &model = ran_model())
{
    return hilb_series(spec, m, model).coefficient(m);
}

// Closed coefficient formula for a compact curve:
//   Σ_s (-1)^s Σ_t C(δ,t) C(t,s-t) L^{s-t} (1 + L + ... + L^{m-s}).
inline WeightPoly hilb_class_closed_form(unsigned delta, std::size_t m)
{
    WeightPoly total;
    for (std::size_t s = 0; s <= m; ++s) {
        WeightPoly inner;
        for (long long t = 0; t <= static_cast<long long>(delta); ++t) {
            const long long e = static_cast<long long>(s) - t;
            const Integer c = binom(delta, t) * binom(t, e);
            if (c != 0) {
                inner += WeightPoly::monomial(c, static_cast<std::size_t>(e));
            }
        }
        inner *= WeightPoly::geometric(static_cast<long long>(m - s));
        if (s % 2 == 0) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    return total;
}

namespace detail
{

// Coefficients of the Hilbert series of C minus one node: delta - 1 nodes,
// two punctures (the preimages of the removed node).
inline std::vector<WeightPoly> minus_node_classes(unsigned delta, std::size_t m, const LocalModel &model)
{
    const auto s = hilb_series(CurveSpec{delta - 1, 2}, m, model);
    return {s.coeffs().begin(), s.coeffs().end()};
}

} // namespace detail

// [C̃^[m]] = Σ_k k [(C - x)^[m-k]]: subschemes of C minus a node, paired with
// a length-k scheme on the two branch points {p, q}, weighted by k. This is
// the term produced by the nested stratification; it coincides with
// [C'^[m-1]] for the (delta - 1)-nodal compact curve C'. Requires delta >= 1.
inline WeightPoly tilde_hilb_class(unsigned delta, std::size_t m, const LocalModel &model = ran_model())
{
    if (delta == 0) {
        return {};
    }
    const auto rest = detail::minus_node_classes(delta, m, model);
    WeightPoly r;
    for (std::size_t k = 1; k <= m; ++k) {
        r += WeightPoly(static_cast<long long>(k)) * rest[m - k];
    }
    return r;
}

// [C^[m,m+1]] = [C^[m]]·[C] + delta Σ_k ([C_x^[k,k+1]] - [C_x^[k]]) [(C - x)^[m-k]].
// With the chain-of-lines local classes the sum is delta·L·[C̃^[m]].
inline WeightPoly nested_class(unsigned delta, std::size_t m, const LocalModel &model = ran_model())
{
    const CurveSpec spec{delta, 0};
    WeightPoly r = hilb_class(spec, m, model) * curve_class(spec);
    if (delta == 0) {
        return r;
    }
    const auto rest = detail::minus_node_classes(delta, m, model);
    WeightPoly node_part;
    for (std::size_t k = 0; k <= m; ++k) {
        const auto kk = static_cast<unsigned>(k);
        node_part += (model.nested(kk) - model.hilb(kk)) * rest[m - k];
    }
    return r + WeightPoly(static_cast<long long>(delta)) * node_part;
}

// Stratification by where the extra point of the nested pair lands: on the
// smooth locus C_reg = C minus its nodes, or at a node x together with k
// points of the smaller subscheme.
inline WeightPoly nested_class_direct(unsigned delta, std::size_t m, const LocalModel &model = ran_model())
{
    const CurveSpec spec{delta, 0};
    const WeightPoly c_reg = curve_class(spec) - WeightPoly(static_cast<long long>(delta));
    WeightPoly r = hilb_class(spec, m, model) * c_reg;
    if (delta == 0) {
        return r;
    }
    const auto rest = detail::minus_node_classes(delta, m, model);
    WeightPoly at_node;
    for (std::size_t k = 0; k <= m; ++k) {
        at_node += rest[m - k] * model.nested(static_cast<unsigned>(k));
    }
    return r + WeightPoly(static_cast<long long>(delta)) * at_node;
}

} // namespace nodalhilb

#endif
