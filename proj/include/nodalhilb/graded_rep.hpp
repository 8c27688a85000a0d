#ifndef NODALHILB_GRADED_REP_HPP
#define NODALHILB_GRADED_REP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <nodalhilb/errors.hpp>
#include <nodalhilb/sparse_matrix.hpp>
#include <nodalhilb/weight_poly.hpp>

namespace nodalhilb
{

// Finite-dimensional representation of Z^delta over Q, one generator matrix
// per node, with an even weight attached to every basis vector.
struct GradedRep {
    std::vector<int> weights;
    std::vector<SparseMatrix> generators;

    std::size_t dim() const noexcept { return weights.size(); }
    std::size_t delta() const noexcept { return generators.size(); }

    static GradedRep zero(std::size_t delta) { return {{}, std::vector<SparseMatrix>(delta)}; }

    // One-dimensional weight-0 representation with trivial action.
    static GradedRep trivial(std::size_t delta)
    {
        return {{0}, std::vector<SparseMatrix>(delta, SparseMatrix::identity(1))};
    }
};

struct GradedSpace {
    std::vector<int> weights;

    std::size_t dim() const noexcept { return weights.size(); }

    // Σ L^{w/2} over the basis.
    WeightPoly weight_polynomial() const
    {
        WeightPoly p;
        for (int w : weights) {
            p += WeightPoly::L(static_cast<std::size_t>(w / 2));
        }
        return p;
    }
};

// H^1 of a smooth nearby fibre: basis (α_1, β_1, ..., α_δ, β_δ) with weights
// (0, 2, ...); T_i fixes everything except β_i ↦ α_i + β_i.
inline GradedRep build_h1(std::size_t delta)
{
    GradedRep rep;
    rep.weights.resize(2 * delta);
    for (std::size_t i = 0; i < delta; ++i) {
        rep.weights[2 * i] = 0;
        rep.weights[2 * i + 1] = 2;
    }
    for (std::size_t i = 0; i < delta; ++i) {
        SparseMatrix t = SparseMatrix::identity(2 * delta);
        t.set_column(2 * i + 1, {{2 * i, Rational(1)}, {2 * i + 1, Rational(1)}});
        rep.generators.push_back(std::move(t));
    }
    return rep;
}

inline GradedRep tate_twist(GradedRep rep, int k)
{
    for (auto &w : rep.weights) {
        w += 2 * k;
    }
    return rep;
}

inline GradedRep direct_sum(const GradedRep &a, const GradedRep &b)
{
    if (a.delta() != b.delta()) {
        throw DeltaMismatch();
    }
    GradedRep r;
    r.weights = a.weights;
    r.weights.insert(r.weights.end(), b.weights.begin(), b.weights.end());
    const std::size_t off = a.dim();
    for (std::size_t g = 0; g < a.delta(); ++g) {
        SparseMatrix m(r.dim());
        for (std::size_t c = 0; c < a.dim(); ++c) {
            m.set_column(c, a.generators[g].column(c));
        }
        for (std::size_t c = 0; c < b.dim(); ++c) {
            SparseMatrix::Column col;
            for (const auto &[row, v] : b.generators[g].column(c)) {
                col.emplace_back(row + off, v);
            }
            m.set_column(c + off, std::move(col));
        }
        r.generators.push_back(std::move(m));
    }
    return r;
}

// Basis (i, j) at index i * b.dim() + j; the group acts diagonally.
inline GradedRep tensor(const GradedRep &a, const GradedRep &b)
{
    if (a.delta() != b.delta()) {
        throw DeltaMismatch();
    }
    const std::size_t nb = b.dim();
    GradedRep r;
    r.weights.reserve(a.dim() * nb);
    for (int wa : a.weights) {
        for (int wb : b.weights) {
            r.weights.push_back(wa + wb);
        }
    }
    for (std::size_t g = 0; g < a.delta(); ++g) {
        SparseMatrix m(r.dim());
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            for (std::size_t cb = 0; cb < nb; ++cb) {
                SparseMatrix::Column col;
                for (const auto &[ra, va] : a.generators[g].column(ca)) {
                    for (const auto &[rb, vb] : b.generators[g].column(cb)) {
                        col.emplace_back(ra * nb + rb, va * vb);
                    }
                }
                m.set_column(ca * nb + cb, std::move(col));
            }
        }
        r.generators.push_back(std::move(m));
    }
    return r;
}

namespace detail
{

inline std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t l)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (cur.size() == l) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (l - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Sorts idx in place; returns the sign of the permutation, or 0 on a repeat.
inline int sort_with_sign(std::vector<std::size_t> &idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) {
                return 0;
            }
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace detail

// l-th exterior power. Basis: sorted l-subsets of the base basis in
// lexicographic order. For l > dim the result is the zero representation.
inline GradedRep exterior_power(const GradedRep &rep, std::size_t l)
{
    if (l > rep.dim()) {
        return GradedRep::zero(rep.delta());
    }
    const auto subsets = detail::sorted_subsets(rep.dim(), l);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        index.emplace(subsets[i], i);
    }

    GradedRep r;
    for (const auto &s : subsets) {
        int w = 0;
        for (auto x : s) {
            w += rep.weights[x];
        }
        r.weights.push_back(w);
    }

    for (const auto &t : rep.generators) {
        SparseMatrix m(subsets.size());
        for (std::size_t c = 0; c < subsets.size(); ++c) {
            // Expand T e_{s_1} ∧ ... ∧ T e_{s_l} term by term.
            SparseMatrix::Column col;
            std::vector<std::size_t> rows;
            auto expand = [&](auto &&self, std::size_t pos, const Rational &coef) -> void {
                if (pos == l) {
                    auto sorted = rows;
                    const int sign = detail::sort_with_sign(sorted);
                    if (sign != 0) {
                        col.emplace_back(index.at(sorted), sign > 0 ? coef : Rational(-coef));
                    }
                    return;
                }
                for (const auto &[row, v] : t.column(subsets[c][pos])) {
                    if (std::find(rows.begin(), rows.end(), row) != rows.end()) {
                        continue;
                    }
                    rows.push_back(row);
                    self(self, pos + 1, coef * v);
                    rows.pop_back();
                }
            };
            expand(expand, 0, Rational(1));
            m.set_column(c, std::move(col));
        }
        r.generators.push_back(std::move(m));
    }
    return r;
}

// Homogeneous basis of the joint fixed space of all generators.
struct InvariantBasis {
    // Sparse vectors: (coordinate, value), sorted by coordinate.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> vectors;
    std::vector<int> weights;
};

// Joint kernel of the stacked (T_i - id). The system splits into blocks of
// coordinates coupled by some equation; each block is solved by exact RREF
// and its kernel basis is itself brought to RREF, which makes every basis
// vector weight-homogeneous whenever the kernel is a graded subspace. A
// vector mixing weights raises NonHomogeneousKernel.
inline InvariantBasis invariant_basis(const GradedRep &rep)
{
    const std::size_t n = rep.dim();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    // rows[g][r]: entries of row r of T_g - id.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> rows(rep.delta());
    for (std::size_t g = 0; g < rep.delta(); ++g) {
        rows[g].resize(n);
        const SparseMatrix &t = rep.generators[g];
        for (std::size_t c = 0; c < n; ++c) {
            bool diag = false;
            for (const auto &[r, v] : t.column(c)) {
                Rational e = v;
                if (r == c) {
                    e -= 1;
                    diag = true;
                }
                if (e != 0) {
                    rows[g][r].emplace_back(c, std::move(e));
                }
            }
            if (!diag) {
                rows[g][c].emplace_back(c, Rational(-1));
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            const auto &row = rows[g][r];
            for (std::size_t k = 1; k < row.size(); ++k) {
                parent[find(row[k].first)] = find(row[0].first);
            }
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t c = 0; c < n; ++c) {
        blocks[find(c)].push_back(c);
    }
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> block_rows;
    for (std::size_t g = 0; g < rep.delta(); ++g) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!rows[g][r].empty()) {
                block_rows[find(rows[g][r][0].first)].emplace_back(g, r);
            }
        }
    }

    InvariantBasis out;
    for (const auto &[root, cols] : blocks) {
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            local.emplace(cols[i], i);
        }
        DenseMatrix system;
        if (auto it = block_rows.find(root); it != block_rows.end()) {
            for (const auto &[g, r] : it->second) {
                std::vector<Rational> eq(cols.size());
                for (const auto &[c, v] : rows[g][r]) {
                    eq[local.at(c)] = v;
                }
                system.push_back(std::move(eq));
            }
        }
        DenseMatrix kernel = nullspace(std::move(system), cols.size());
        rref(kernel, cols.size());
        for (const auto &v : kernel) {
            std::vector<std::pair<std::size_t, Rational>> sv;
            int weight = -1;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (v[i] == 0) {
                    continue;
                }
                const int w = rep.weights[cols[i]];
                if (weight >= 0 && w != weight) {
                    throw NonHomogeneousKernel("invariant vector mixes weights " + std::to_string(weight) + " and "
                                               + std::to_string(w));
                }
                weight = w;
                sv.emplace_back(cols[i], v[i]);
            }
            out.vectors.push_back(std::move(sv));
            out.weights.push_back(weight);
        }
    }
    return out;
}

inline GradedSpace invariants(const GradedRep &rep)
{
    auto b = invariant_basis(rep);
    std::sort(b.weights.begin(), b.weights.end());
    return {std::move(b.weights)};
}

// Structural checks used by the tests and the CLI's self-test.
inline bool generators_commute(const GradedRep &rep)
{
    for (std::size_t i = 0; i < rep.delta(); ++i) {
        for (std::size_t j = i + 1; j < rep.delta(); ++j) {
            if (rep.generators[i] * rep.generators[j] != rep.generators[j] * rep.generators[i]) {
                return false;
            }
        }
    }
    return true;
}

// Entry (r, c) may be nonzero only if weight(r) <= weight(c).
inline bool preserves_weight_filtration(const GradedRep &rep)
{
    for (const auto &t : rep.generators) {
        for (std::size_t c = 0; c < rep.dim(); ++c) {
            for (const auto &[r, v] : t.column(c)) {
                if (rep.weights[r] > rep.weights[c]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// (T_i - id)^2 = 0 for every generator.
inline bool is_unipotent_of_step_two(const GradedRep &rep)
{
    const auto id = SparseMatrix::identity(rep.dim());
    for (const auto &t : rep.generators) {
        const auto n = t - id;
        if ((n * n).nonzeros() != 0) {
            return false;
        }
    }
    return true;
}

} // namespace nodalhilb

#endif
