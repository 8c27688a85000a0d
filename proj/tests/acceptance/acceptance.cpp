// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <nodalhilb/nodalhilb.hpp>

using namespace nodalhilb;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int number;
    const char *title;
    double limit_seconds;
    std::function<Outcome()> body;
};

const WeightPoly L = WeightPoly::L();

std::string cell(unsigned d, unsigned m) { return "(delta=" + std::to_string(d) + ", m=" + std::to_string(m) + ")"; }

Outcome grid_outcome(const VerificationReport &r)
{
    Outcome o;
    for (const auto &c : r.cells) {
        o.require(c.status == CellStatus::pass, std::string(identity_name(c.identity)) + " " + cell(c.delta, c.m) + ": "
                                                    + to_string(c.lhs) + " vs " + to_string(c.rhs) + " " + c.detail);
    }
    o.detail = o.ok ? std::to_string(r.cells.size()) + " cells" : o.detail;
    return o;
}

Outcome punctual_classes()
{
    Outcome o;
    for (unsigned k = 1; k <= 50; ++k) {
        const auto kk = static_cast<long long>(k);
        o.require(node_punctual_hilb_class(k) == WeightPoly{1, kk - 1}, "hilb k=" + std::to_string(k));
        o.require(node_punctual_nested_class(k) == WeightPoly{1, 2 * kk - 1}, "nested k=" + std::to_string(k));
        o.require(node_punctual_nested_class(k) - node_punctual_hilb_class(k) == WeightPoly(kk) * L,
                  "difference k=" + std::to_string(k));
    }
    return o;
}

Outcome series_vs_closed_form()
{
    Outcome o;
    for (unsigned d = 0; d <= 6; ++d) {
        for (unsigned m = 0; m <= 12; ++m) {
            o.require(hilb_class(CurveSpec{d, 0}, m) == hilb_class_closed_form(d, m), cell(d, m));
        }
    }
    return o;
}

Outcome stratifications_agree()
{
    Outcome o;
    for (unsigned d = 0; d <= 6; ++d) {
        for (unsigned m = 0; m <= 12; ++m) {
            o.require(nested_class(d, m) == nested_class_direct(d, m), cell(d, m));
        }
    }
    return o;
}

Outcome invariants_oracle_vs_closed()
{
    Outcome o;
    for (std::size_t d = 0; d <= 4; ++d) {
        const auto h = build_h1(d);
        for (long long l = 0; l <= 8; ++l) {
            o.require(invariant_weight_polynomial(exterior_power(h, static_cast<std::size_t>(l)))
                          == exterior_invariants_closed(l, static_cast<long long>(d)),
                      "exterior delta=" + std::to_string(d) + " l=" + std::to_string(l));
        }
        for (long long i = 0; i <= 10; ++i) {
            o.require(invariant_weight_polynomial(hilb_cohomology_rep(d, static_cast<std::size_t>(i), i)) == closed_form_I(i, d),
                      "I(" + std::to_string(i) + ", " + std::to_string(d) + ")");
        }
    }
    return o;
}

Outcome degenerations()
{
    Outcome o;
    for (unsigned m = 0; m <= 8; ++m) {
        const auto pm = WeightPoly::geometric(m);
        o.require(hilb_class(CurveSpec{0, 0}, m) == pm, "hilb_class(0," + std::to_string(m) + ")");
        o.require(w_H(0, m, Method::oracle) == pm, "w_H(0," + std::to_string(m) + ")");
        o.require(nested_class(0, m) == pm * WeightPoly{1, 1}, "nested_class(0," + std::to_string(m) + ")");
        o.require(w_I(0, m, Method::oracle) == pm * WeightPoly{1, 1}, "w_I(0," + std::to_string(m) + ")");
    }
    for (unsigned d = 0; d <= 6; ++d) {
        o.require(nested_class(d, 0) == WeightPoly{1 - static_cast<long long>(d), 1}, "nested m=0 " + cell(d, 0));
        for (unsigned m = 0; m <= 12; ++m) {
            o.require(eval_at_one(hilb_class(CurveSpec{d, 0}, m)) == eval_at_one(hilb_class_closed_form(d, m)),
                      "chi hilb " + cell(d, m));
            o.require(eval_at_one(nested_class(d, m)) == eval_at_one(nested_class_direct(d, m)), "chi nested " + cell(d, m));
        }
    }
    return o;
}

Outcome harness_honesty()
{
    Outcome o;
    const std::vector<Identity> all(std::begin(all_identities), std::end(all_identities));
    LocalModel bad_hilb;
    bad_hilb.hilb = [](unsigned k) { return k >= 2 ? WeightPoly{1, static_cast<long long>(k)} : WeightPoly(1); };
    LocalModel bad_nested;
    bad_nested.nested = [](unsigned k) { return k >= 1 ? WeightPoly{1, 2 * static_cast<long long>(k)} : WeightPoly(1); };

    int flipped_models = 0;
    for (const auto *model : {&bad_hilb, &bad_nested}) {
        VerifyOptions opts;
        opts.model = *model;
        const auto r = verify_grid(3, 4, all, opts);
        bool flipped = false;
        for (const auto &c : r.cells) {
            if (c.status == CellStatus::fail) {
                flipped = true;
                o.require(c.lhs != c.rhs && !(c.lhs.is_zero() && c.rhs.is_zero()), "failing cell without witnesses");
            }
        }
        flipped_models += flipped ? 1 : 0;
    }
    o.require(flipped_models == 2, "an injected fault went unnoticed");
    return o;
}

} // namespace

int main()
{
    const std::vector<Identity> hilb{Identity::hilb_support};
    const std::vector<Identity> nested{Identity::nested_support};
    const std::vector<Identity> lemmas{Identity::lemma_A, Identity::lemma_B};

    const std::vector<Criterion> criteria{
        {1, "punctual classes (k-1)L+1, (2k-1)L+1, difference kL for 1<=k<=50", 1.0, punctual_classes},
        {2, "series = closed form for hilb_class, delta<=6, m<=12", 5.0, series_vs_closed_form},
        {3, "nested_class = nested_class_direct, delta<=6, m<=12", 5.0, stratifications_agree},
        {4, "invariants of exterior powers and I(i,delta): oracle = closed form", 30.0, invariants_oracle_vs_closed},
        {5, "w(C^[m]) = w(H^m), delta<=4, m<=8", 120.0, [&] { return grid_outcome(verify_grid(4, 8, hilb)); }},
        {6, "w(C^[m,m+1]) = w(I^m), delta<=4, m<=8", 300.0, [&] { return grid_outcome(verify_grid(4, 8, nested)); }},
        {7, "lemma A and lemma B splits, extra routes agree, delta<=4, m<=8", 300.0,
         [&] { return grid_outcome(verify_grid(4, 8, lemmas)); }},
        {8, "degenerations delta=0, m=0 and L->1 specializations", 1.0, degenerations},
        {9, "injected punctual-class faults flip verification cells", 300.0, harness_honesty},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.number, c.title, secs,
                    c.limit_seconds, o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!in_time) {
            std::printf("       exceeded time limit\n");
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
