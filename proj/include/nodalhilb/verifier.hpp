#ifndef NODALHILB_VERIFIER_HPP
#define NODALHILB_VERIFIER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include <nodalhilb/curve_classes.hpp>
#include <nodalhilb/errors.hpp>
#include <nodalhilb/monodromy.hpp>

namespace nodalhilb
{

enum class Identity { hilb_support, nested_support, lemma_A, lemma_B };

inline constexpr Identity all_identities[] = {Identity::hilb_support, Identity::nested_support, Identity::lemma_A,
                                              Identity::lemma_B};

inline std::string_view identity_name(Identity id)
{
    switch (id) {
    case Identity::hilb_support:
        return "hilb_support";
    case Identity::nested_support:
        return "nested_support";
    case Identity::lemma_A:
        return "lemma_A";
    case Identity::lemma_B:
        return "lemma_B";
    }
    return "?";
}

inline std::optional<Identity> parse_identity(std::string_view s)
{
    for (auto id : all_identities) {
        if (identity_name(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

enum class CellStatus { pass, fail, timeout };

inline std::string_view status_name(CellStatus s)
{
    switch (s) {
    case CellStatus::pass:
        return "pass";
    case CellStatus::fail:
        return "fail";
    case CellStatus::timeout:
        return "timeout";
    }
    return "?";
}

// One (delta, m) check. lhs is always the Grothendieck-class side, rhs the
// monodromy (linear algebra) side.
struct CellResult {
    Identity identity = Identity::hilb_support;
    unsigned delta = 0;
    unsigned m = 0;
    CellStatus status = CellStatus::fail;
    WeightPoly lhs;
    WeightPoly rhs;
    std::string lhs_source;
    std::string rhs_source;
    std::string detail;
    double elapsed_ms = 0;
};

namespace detail
{

inline CellResult make_cell(Identity id, unsigned delta, unsigned m, WeightPoly lhs, WeightPoly rhs, std::string lhs_src,
                            std::string rhs_src)
{
    CellResult c;
    c.identity = id;
    c.delta = delta;
    c.m = m;
    c.status = lhs == rhs ? CellStatus::pass : CellStatus::fail;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.lhs_source = std::move(lhs_src);
    c.rhs_source = std::move(rhs_src);
    return c;
}

// Signed extra aggregate (structural route). Records the first degree where
// the difference route disagrees in `mismatch`.
inline WeightPoly checked_extra_aggregate(unsigned delta, unsigned m, std::string &mismatch)
{
    WeightPoly total;
    for (long long i = 0; i <= 2 * static_cast<long long>(m) + 2; ++i) {
        const auto s = split_invariants_extra(delta, m, i, ExtraRoute::structural);
        const auto d = split_invariants_extra(delta, m, i, ExtraRoute::difference);
        if (s != d && mismatch.empty()) {
            mismatch = "extra invariants disagree in degree " + std::to_string(i) + ": structural " + to_string(s)
                       + ", difference " + to_string(d);
        }
        total += alternate(i, s);
    }
    return total;
}

} // namespace detail

// 𝔴(C^[m]) = 𝔴(H^m)
inline CellResult verify_hilb_support(unsigned delta, unsigned m, const LocalModel &model = ran_model())
{
    return detail::make_cell(Identity::hilb_support, delta, m, hilb_class(CurveSpec{delta, 0}, m, model),
                             w_H(delta, m, Method::oracle), "curve_classes.hilb_class", "monodromy_oracle.w_H");
}

// 𝔴(C^[m,m+1]) = 𝔴(I^m)
inline CellResult verify_nested_support(unsigned delta, unsigned m, const LocalModel &model = ran_model())
{
    return detail::make_cell(Identity::nested_support, delta, m, nested_class(delta, m, model),
                             w_I(delta, m, Method::oracle), "curve_classes.nested_class", "monodromy_oracle.w_I");
}

// A := 𝔴(I^m) - (extra invariants) must equal [C^[m]]·[C] and 𝔴(H^m)(L + 1 - δ).
inline CellResult verify_lemma_A(unsigned delta, unsigned m, const LocalModel &model = ran_model())
{
    std::string mismatch;
    const WeightPoly extra = detail::checked_extra_aggregate(delta, m, mismatch);
    const WeightPoly a = w_I(delta, m, Method::oracle) - extra;
    const CurveSpec spec{delta, 0};
    auto cell = detail::make_cell(Identity::lemma_A, delta, m, hilb_class(spec, m, model) * curve_class(spec), a,
                                  "curve_classes.hilb_class*curve_class", "monodromy_oracle.w_I-extra");
    const WeightPoly via_h = w_H(delta, m, Method::oracle) * curve_class(spec);
    if (a != via_h) {
        cell.status = CellStatus::fail;
        cell.detail = "A differs from w_H*(L+1-delta) = " + to_string(via_h);
    }
    if (!mismatch.empty()) {
        cell.status = CellStatus::fail;
        cell.detail = mismatch;
    }
    return cell;
}

// Extra invariants sum to δ·L·[C̃^[m]].
inline CellResult verify_lemma_B(unsigned delta, unsigned m, const LocalModel &model = ran_model())
{
    std::string mismatch;
    const WeightPoly extra = detail::checked_extra_aggregate(delta, m, mismatch);
    auto cell = detail::make_cell(Identity::lemma_B, delta, m,
                                  WeightPoly(static_cast<long long>(delta)) * WeightPoly::L() * tilde_hilb_class(delta, m, model),
                                  extra, "curve_classes.delta*L*tilde_hilb_class", "monodromy_oracle.split_invariants_extra");
    if (!mismatch.empty()) {
        cell.status = CellStatus::fail;
        cell.detail = mismatch;
    }
    return cell;
}

inline CellResult verify_cell(Identity id, unsigned delta, unsigned m, const LocalModel &model = ran_model())
{
    switch (id) {
    case Identity::hilb_support:
        return verify_hilb_support(delta, m, model);
    case Identity::nested_support:
        return verify_nested_support(delta, m, model);
    case Identity::lemma_A:
        return verify_lemma_A(delta, m, model);
    case Identity::lemma_B:
        return verify_lemma_B(delta, m, model);
    }
    return {};
}

struct VerifyOptions {
    unsigned jobs = 1;
    // Cells that take longer are reported as timeout (measured after the fact).
    std::optional<double> timeout_seconds;
    bool allow_large = false;
    unsigned delta_bound = 5;
    unsigned m_bound = 12;
    LocalModel model = ran_model();
};

struct VerificationReport {
    std::vector<Identity> identities;
    unsigned delta_max = 0;
    unsigned m_max = 0;
    std::vector<CellResult> cells;
    std::vector<std::string> notes;

    std::size_t count(CellStatus s) const
    {
        return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [s](const CellResult &c) { return c.status == s; }));
    }
    bool passed() const { return count(CellStatus::pass) == cells.size(); }
};

inline std::vector<std::string> convention_notes()
{
    return {
        "kunneth: H^i(C^[m] x C) = H^i(C^[m]) + H^{i-1}(C^[m]) (x) H^1 + H^{i-2}(C^[m])(-1); third summand in degree i-2",
        "duality: H^j(C^[m]) = H^{2m-j}(C^[m])(-(j-m)) for j > m, raising weights by 2(j-m)",
        "C_{p,q}^[k] enters with weight k: tilde term sum_k k [(C-x)^[m-k]] = [C'^[m-1]] for the (delta-1)-nodal "
        "compact curve C', not [C'' ^[m]] for C'' = C' minus two points",
        "invariant weights read off an RREF kernel basis; weight-homogeneity asserted",
    };
}

// Largest representation dimension the grid will touch: H^j(C^[m]) ⊗ H^1.
inline Integer largest_rep_dimension(unsigned delta_max, unsigned m_max)
{
    Integer best = 0;
    for (long long j = 0; j <= m_max; ++j) {
        Integer d = 0;
        for (long long k = 0; 2 * k <= j; ++k) {
            d += binom(2LL * delta_max, j - 2 * k);
        }
        best = std::max(best, Integer(d * 2 * delta_max));
    }
    return best;
}

inline VerificationReport verify_grid(unsigned delta_max, unsigned m_max, std::vector<Identity> identities,
                                      const VerifyOptions &opts = {})
{
    if (!opts.allow_large && (delta_max > opts.delta_bound || m_max > opts.m_bound)) {
        std::ostringstream msg;
        msg << "grid delta<=" << delta_max << ", m<=" << m_max << " exceeds the safety bound (delta<="
            << opts.delta_bound << ", m<=" << opts.m_bound << "); largest representation would have dimension ~"
            << largest_rep_dimension(delta_max, m_max) << ". Pass --allow-large or set NODALHILB_ALLOW_LARGE=1 to run it.";
        throw BoundExceeded(msg.str());
    }
    std::sort(identities.begin(), identities.end());
    identities.erase(std::unique(identities.begin(), identities.end()), identities.end());

    VerificationReport report;
    report.identities = identities;
    report.delta_max = delta_max;
    report.m_max = m_max;
    report.notes = convention_notes();

    struct Task {
        Identity id;
        unsigned delta;
        unsigned m;
    };
    std::vector<Task> tasks;
    for (auto id : identities) {
        for (unsigned d = 0; d <= delta_max; ++d) {
            for (unsigned m = 0; m <= m_max; ++m) {
                tasks.push_back({id, d, m});
            }
        }
    }
    report.cells.resize(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            const auto [id, d, m] = tasks[t];
            const auto start = std::chrono::steady_clock::now();
            CellResult cell;
            try {
                cell = verify_cell(id, d, m, opts.model);
            } catch (const std::exception &e) {
                cell.identity = id;
                cell.delta = d;
                cell.m = m;
                cell.status = CellStatus::fail;
                cell.detail = e.what();
            }
            cell.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (opts.timeout_seconds && cell.elapsed_ms > *opts.timeout_seconds * 1000.0) {
                cell.status = CellStatus::timeout;
            }
            report.cells[t] = std::move(cell);
        }
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    return report;
}

inline nlohmann::json to_json(const VerificationReport &r, bool include_timing = true)
{
    nlohmann::json j;
    j["identities"] = nlohmann::json::array();
    for (auto id : r.identities) {
        j["identities"].push_back(identity_name(id));
    }
    j["grid"] = {{"delta_max", r.delta_max}, {"m_max", r.m_max}};
    j["cells"] = nlohmann::json::array();
    for (const auto &c : r.cells) {
        nlohmann::json cj = {{"identity", identity_name(c.identity)},
                             {"delta", c.delta},
                             {"m", c.m},
                             {"status", status_name(c.status)},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"lhs_source", c.lhs_source},
                             {"rhs_source", c.rhs_source}};
        if (!c.detail.empty()) {
            cj["detail"] = c.detail;
        }
        if (include_timing) {
            cj["elapsed_ms"] = c.elapsed_ms;
        }
        j["cells"].push_back(std::move(cj));
    }
    j["notes"] = r.notes;
    j["summary"] = {{"pass", r.count(CellStatus::pass)},
                    {"fail", r.count(CellStatus::fail)},
                    {"timeout", r.count(CellStatus::timeout)}};
    return j;
}

inline std::string to_csv(const VerificationReport &r)
{
    std::ostringstream os;
    os << "identity,delta,m,status,lhs,rhs,elapsed_ms\n";
    for (const auto &c : r.cells) {
        os << identity_name(c.identity) << ',' << c.delta << ',' << c.m << ',' << status_name(c.status) << ",\""
           << to_string(c.lhs) << "\",\"" << to_string(c.rhs) << "\"," << c.elapsed_ms << '\n';
    }
    return os.str();
}

// Aligned plain-text table followed by a summary line.
inline std::string to_text(const VerificationReport &r)
{
    std::vector<std::vector<std::string>> rows{{"identity", "delta", "m", "status", "lhs", "rhs", "ms"}};
    for (const auto &c : r.cells) {
        std::ostringstream ms;
        ms.precision(1);
        ms << std::fixed << c.elapsed_ms;
        rows.push_back({std::string(identity_name(c.identity)), std::to_string(c.delta), std::to_string(c.m),
                        std::string(status_name(c.status)), to_string(c.lhs), to_string(c.rhs), ms.str()});
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) {
                os << std::string(width[i] - row[i].size() + 2, ' ');
            }
        }
        os << '\n';
    }
    for (const auto &c : r.cells) {
        if (!c.detail.empty()) {
            os << identity_name(c.identity) << " (" << c.delta << ", " << c.m << "): " << c.detail << '\n';
        }
    }
    os << "pass " << r.count(CellStatus::pass) << ", fail " << r.count(CellStatus::fail) << ", timeout "
       << r.count(CellStatus::timeout) << '\n';
    return os.str();
}

} // namespace nodalhilb

#endif
