#ifndef NODALHILB_MONODROMY_HPP
#define NODALHILB_MONODROMY_HPP

#include <cstddef>
#include <string>

#include <nodalhilb/errors.hpp>
#include <nodalhilb/graded_rep.hpp>
#include <nodalhilb/weight_poly.hpp>

// Monodromy-invariant parts of the cohomology of Hilbert schemes (and nested
// Hilbert schemes) of a smooth fibre near a rational delta-nodal curve, by
// exact linear algebra on the Picard-Lefschetz representation and by closed
// binomial sums.

namespace nodalhilb
{

enum class Method { oracle, closed_form };

namespace detail
{

// MacDonald assembly of H^j(C^[m]) from a base H^1:
//   ⊕_{k <= j/2} ∧^{j-2k-lower} H^1 (-k)            for 0 <= j <= m,
//   (degree 2m - j assembly)(-(j - m))              for m < j <= 2m,
// zero otherwise. `lower` drops the exterior degree; the extra invariants of
// H^j ⊗ H^1 live on ∧^{j-2k-1} of the remaining blocks.
inline GradedRep macdonald_assemble(const GradedRep &h1, std::size_t m, long long j, long long lower = 0)
{
    const auto mm = static_cast<long long>(m);
    if (j < 0 || j > 2 * mm) {
        return GradedRep::zero(h1.delta());
    }
    if (j > mm) {
        return tate_twist(macdonald_assemble(h1, m, 2 * mm - j, lower), static_cast<int>(j - mm));
    }
    GradedRep r = GradedRep::zero(h1.delta());
    for (long long k = 0; 2 * k <= j; ++k) {
        const long long l = j - 2 * k - lower;
        if (l < 0) {
            continue;
        }
        r = direct_sum(r, tate_twist(exterior_power(h1, static_cast<std::size_t>(l)), static_cast<int>(k)));
    }
    return r;
}

// Same assembly on weight polynomials of invariants, given those of ∧^l.
template <typename F>
WeightPoly macdonald_closed(std::size_t m, long long j, F &&exterior)
{
    const auto mm = static_cast<long long>(m);
    if (j < 0 || j > 2 * mm) {
        return {};
    }
    if (j > mm) {
        return WeightPoly::L(static_cast<std::size_t>(j - mm)) * macdonald_closed(m, 2 * mm - j, exterior);
    }
    WeightPoly r;
    for (long long k = 0; 2 * k <= j; ++k) {
        r += WeightPoly::L(static_cast<std::size_t>(k)) * exterior(j - 2 * k);
    }
    return r;
}

inline WeightPoly alternate(long long i, WeightPoly p) { return i % 2 == 0 ? p : -p; }

} // namespace detail

inline WeightPoly invariant_weight_polynomial(const GradedRep &rep) { return invariants(rep).weight_polynomial(); }

// R^i of the relative Hilbert scheme as a monodromy representation.
inline GradedRep hilb_cohomology_rep(std::size_t delta, std::size_t m, long long i)
{
    if (i < 0 || i > 2 * static_cast<long long>(m)) {
        throw DegreeOutOfRange("degree " + std::to_string(i) + " outside [0, " + std::to_string(2 * m) + "]");
    }
    return detail::macdonald_assemble(build_h1(delta), m, i);
}

// Künneth for C^[m] x C:  H^i(C^[m]) ⊕ H^{i-1}(C^[m]) ⊗ H^1 ⊕ H^{i-2}(C^[m])(-1).
inline GradedRep nested_cohomology_rep(std::size_t delta, std::size_t m, long long i)
{
    if (i < 0 || i > 2 * static_cast<long long>(m) + 2) {
        throw DegreeOutOfRange("degree " + std::to_string(i) + " outside [0, " + std::to_string(2 * m + 2) + "]");
    }
    const GradedRep h1 = build_h1(delta);
    GradedRep r = detail::macdonald_assemble(h1, m, i);
    r = direct_sum(r, tensor(detail::macdonald_assemble(h1, m, i - 1), h1));
    return direct_sum(r, tate_twist(detail::macdonald_assemble(h1, m, i - 2), 1));
}

// Invariants of ∧^l H^1: Σ_j C(δ,j) C(δ-j, l-2j) L^j, j counting the blocks
// with l_i = 2.
inline WeightPoly exterior_invariants_closed(long long l, long long delta)
{
    WeightPoly r;
    if (l < 0) {
        return r;
    }
    for (long long j = 0; 2 * j <= l; ++j) {
        const Integer c = binom(delta, j) * binom(delta - j, l - 2 * j);
        if (c != 0) {
            r += WeightPoly::monomial(c, static_cast<std::size_t>(j));
        }
    }
    return r;
}

// I(i, δ), unsigned: Σ_k L^k Σ_j C(δ,j) C(δ-j, i-2k-2j) L^j.
inline WeightPoly closed_form_I(long long i, std::size_t delta)
{
    WeightPoly r;
    for (long long k = 0; 2 * k <= i; ++k) {
        r += WeightPoly::L(static_cast<std::size_t>(k)) * exterior_invariants_closed(i - 2 * k, static_cast<long long>(delta));
    }
    return r;
}

// Invariants of H^i(C^[m]) in closed form, duality included.
inline WeightPoly closed_form_hilb_degree(std::size_t delta, std::size_t m, long long i)
{
    return detail::macdonald_closed(m, i, [&](long long l) { return exterior_invariants_closed(l, static_cast<long long>(delta)); });
}

// Invariants of ∧^l H^1 ⊗ V_1, split on l_1 (the share of block 1 in the
// wedge), j counting the other blocks with l_i = 2:
//   l_1 = 2:  C(δ-1, j-1) C(δ-j, l-2j) L^j
//   l_1 = 1:  (1 + L) C(δ-1, j) C(δ-1-j, l-2j-1) L^j
//   l_1 = 0:  C(δ-1, j) C(δ-1-j, l-2j) L^j
inline WeightPoly exterior_tensor_block_closed(long long l, long long delta)
{
    WeightPoly r;
    if (delta == 0 || l < 0) {
        return r;
    }
    const WeightPoly one_plus_L{1, 1};
    for (long long j = 0; 2 * j <= l + 1; ++j) {
        const auto Lj = WeightPoly::L(static_cast<std::size_t>(j));
        r += WeightPoly(binom(delta - 1, j - 1) * binom(delta - j, l - 2 * j)) * Lj;
        r += one_plus_L * WeightPoly(binom(delta - 1, j) * binom(delta - 1 - j, l - 2 * j - 1)) * Lj;
        r += WeightPoly(binom(delta - 1, j) * binom(delta - 1 - j, l - 2 * j)) * Lj;
    }
    return r;
}

// Invariants of degree i of the nested Künneth assembly, closed form:
//   H(i) + δ·T(i-1) + L·H(i-2), with T the per-block count above run
//   through the MacDonald assembly.
inline WeightPoly closed_form_nested_degree(std::size_t delta, std::size_t m, long long i)
{
    const auto d = static_cast<long long>(delta);
    const WeightPoly block = detail::macdonald_closed(m, i - 1, [&](long long l) { return exterior_tensor_block_closed(l, d); });
    return closed_form_hilb_degree(delta, m, i) + WeightPoly(d) * block
           + WeightPoly::L() * closed_form_hilb_degree(delta, m, i - 2);
}

// Unsigned invariant weight polynomial of a single degree.
inline WeightPoly hilb_degree_invariants(std::size_t delta, std::size_t m, long long i, Method method)
{
    if (i < 0 || i > 2 * static_cast<long long>(m)) {
        throw DegreeOutOfRange("degree " + std::to_string(i) + " outside [0, " + std::to_string(2 * m) + "]");
    }
    return method == Method::oracle ? invariant_weight_polynomial(hilb_cohomology_rep(delta, m, i))
                                    : closed_form_hilb_degree(delta, m, i);
}

inline WeightPoly nested_degree_invariants(std::size_t delta, std::size_t m, long long i, Method method)
{
    if (i < 0 || i > 2 * static_cast<long long>(m) + 2) {
        throw DegreeOutOfRange("degree " + std::to_string(i) + " outside [0, " + std::to_string(2 * m + 2) + "]");
    }
    return method == Method::oracle ? invariant_weight_polynomial(nested_cohomology_rep(delta, m, i))
                                    : closed_form_nested_degree(delta, m, i);
}

// 𝔴(H^m) = Σ_i (-1)^i 𝔴(invariants of H^i(C^[m])).
inline WeightPoly w_H(std::size_t delta, std::size_t m, Method method)
{
    WeightPoly r;
    const auto mm = static_cast<long long>(m);
    if (method == Method::oracle) {
        for (long long i = 0; i <= 2 * mm; ++i) {
            r += detail::alternate(i, invariant_weight_polynomial(hilb_cohomology_rep(delta, m, i)));
        }
        return r;
    }
    // Degrees i and 2m - i folded together.
    for (long long i = 0; i < mm; ++i) {
        r += detail::alternate(i, (WeightPoly(1) + WeightPoly::L(static_cast<std::size_t>(mm - i))) * closed_form_I(i, delta));
    }
    return r + detail::alternate(mm, closed_form_I(mm, delta));
}

// 𝔴(I^m) = Σ_i (-1)^i 𝔴(invariants of H^i(C^[m] x C)).
inline WeightPoly w_I(std::size_t delta, std::size_t m, Method method)
{
    WeightPoly r;
    for (long long i = 0; i <= 2 * static_cast<long long>(m) + 2; ++i) {
        r += detail::alternate(i, nested_degree_invariants(delta, m, i, method));
    }
    return r;
}

enum class ExtraRoute { structural, difference };

// Weight-2 invariants of the middle Künneth term H^{i-1}(C^[m]) ⊗ H^1 that
// are not products of invariants; they come from ∧^2 V_k ⊂ V_k ⊗ V_k.
//   structural: δ·L·𝔴(invariants of the lowered MacDonald assembly on the
//               remaining δ - 1 blocks)
//   difference: 𝔴(inv(H^{i-1} ⊗ H^1)) - δ·𝔴(inv(H^{i-1}))
inline WeightPoly split_invariants_extra(std::size_t delta, std::size_t m, long long i, ExtraRoute route)
{
    if (i < 0 || i > 2 * static_cast<long long>(m) + 2) {
        throw DegreeOutOfRange("degree " + std::to_string(i) + " outside [0, " + std::to_string(2 * m + 2) + "]");
    }
    if (delta == 0) {
        return {};
    }
    const WeightPoly d(static_cast<long long>(delta));
    if (route == ExtraRoute::structural) {
        const GradedRep rest = detail::macdonald_assemble(build_h1(delta - 1), m, i - 1, 1);
        return d * WeightPoly::L() * invariant_weight_polynomial(rest);
    }
    const GradedRep h1 = build_h1(delta);
    const GradedRep prev = detail::macdonald_assemble(h1, m, i - 1);
    return invariant_weight_polynomial(tensor(prev, h1)) - d * invariant_weight_polynomial(prev);
}

// Σ_i (-1)^i extra(δ, m, i).
inline WeightPoly signed_extra_aggregate(std::size_t delta, std::size_t m, ExtraRoute route)
{
    WeightPoly r;
    for (long long i = 0; i <= 2 * static_cast<long long>(m) + 2; ++i) {
        r += detail::alternate(i, split_invariants_extra(delta, m, i, route));
    }
    return r;
}

} // namespace nodalhilb

#endif
