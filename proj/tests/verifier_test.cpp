#include <gtest/gtest.h>

#include <nodalhilb/verifier.hpp>

using namespace nodalhilb;

namespace
{

const WeightPoly L = WeightPoly::L();

LocalModel off_by_one_nested()
{
    LocalModel bad;
    bad.nested = [](unsigned k) { return k >= 1 ? WeightPoly{1, 2 * static_cast<long long>(k)} : WeightPoly(1); };
    return bad;
}

} // namespace

TEST(VerifyHilbSupport, Examples)
{
    for (unsigned m = 0; m <= 5; ++m) {
        const auto c = verify_hilb_support(0, m);
        EXPECT_EQ(c.status, CellStatus::pass);
        EXPECT_EQ(c.lhs, WeightPoly::geometric(m));
        EXPECT_EQ(c.rhs, c.lhs);
    }
    const auto c11 = verify_hilb_support(1, 1);
    EXPECT_EQ(c11.status, CellStatus::pass);
    EXPECT_EQ(c11.lhs, L);
    EXPECT_EQ(verify_hilb_support(3, 5).status, CellStatus::pass);
}

TEST(VerifyNestedSupport, Examples)
{
    for (unsigned m = 0; m <= 4; ++m) {
        const auto c = verify_nested_support(0, m);
        EXPECT_EQ(c.status, CellStatus::pass);
        EXPECT_EQ(c.lhs, (WeightPoly::geometric(m) * WeightPoly{1, 1}));
    }
    for (unsigned d = 0; d <= 4; ++d) {
        const auto c = verify_nested_support(d, 0);
        EXPECT_EQ(c.status, CellStatus::pass);
        EXPECT_EQ(c.rhs, curve_class(CurveSpec{d, 0}));
    }
    EXPECT_EQ(verify_nested_support(2, 4).status, CellStatus::pass);
}

TEST(VerifyLemmaA, Examples)
{
    for (unsigned m = 0; m <= 4; ++m) {
        const auto c = verify_lemma_A(0, m);
        EXPECT_EQ(c.status, CellStatus::pass);
        EXPECT_EQ(c.rhs, w_I(0, m, Method::oracle));
    }
    const auto c11 = verify_lemma_A(1, 1);
    EXPECT_EQ(c11.status, CellStatus::pass);
    EXPECT_EQ(c11.rhs, L * L);
    EXPECT_EQ(verify_lemma_A(3, 4).status, CellStatus::pass);
}

TEST(VerifyLemmaB, Examples)
{
    for (unsigned m = 0; m <= 4; ++m) {
        const auto c = verify_lemma_B(0, m);
        EXPECT_EQ(c.status, CellStatus::pass);
        EXPECT_TRUE(c.lhs.is_zero());
        EXPECT_TRUE(c.rhs.is_zero());
    }
    // Only the weight-2 invariant of V ⊗ V in degree 2 is extra.
    const auto c11 = verify_lemma_B(1, 1);
    EXPECT_EQ(c11.status, CellStatus::pass);
    EXPECT_EQ(c11.lhs, L);
    EXPECT_EQ(c11.rhs, L);
    EXPECT_EQ(verify_lemma_B(2, 3).status, CellStatus::pass);
}

TEST(VerifyGrid, SmallGridsPass)
{
    const std::vector<Identity> all(std::begin(all_identities), std::end(all_identities));
    const auto r = verify_grid(0, 3, all);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.cells.size(), 4u * 4u);

    const auto h = verify_grid(3, 8, {Identity::hilb_support});
    EXPECT_TRUE(h.passed());
    EXPECT_EQ(h.cells.size(), 4u * 9u);
}

TEST(VerifyGrid, CellOrderIsLexicographic)
{
    const auto r = verify_grid(2, 2, {Identity::lemma_B, Identity::hilb_support, Identity::hilb_support});
    ASSERT_EQ(r.identities, (std::vector<Identity>{Identity::hilb_support, Identity::lemma_B}));
    ASSERT_EQ(r.cells.size(), 18u);
    for (std::size_t i = 1; i < r.cells.size(); ++i) {
        const auto &a = r.cells[i - 1];
        const auto &b = r.cells[i];
        EXPECT_LT(std::tie(a.identity, a.delta, a.m), std::tie(b.identity, b.delta, b.m));
    }
}

TEST(VerifyGrid, DeterministicJsonAcrossRunsAndJobs)
{
    const std::vector<Identity> all(std::begin(all_identities), std::end(all_identities));
    VerifyOptions seq;
    VerifyOptions par;
    par.jobs = 4;
    const auto a = to_json(verify_grid(2, 3, all, seq), false).dump();
    const auto b = to_json(verify_grid(2, 3, all, seq), false).dump();
    const auto c = to_json(verify_grid(2, 3, all, par), false).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(VerifyGrid, InjectedFaultIsReported)
{
    VerifyOptions opts;
    opts.model = off_by_one_nested();
    const auto r = verify_grid(2, 3, {Identity::nested_support}, opts);
    EXPECT_FALSE(r.passed());
    std::size_t failed = 0;
    for (const auto &c : r.cells) {
        if (c.status == CellStatus::fail) {
            ++failed;
            EXPECT_NE(c.lhs, c.rhs);
            EXPECT_FALSE(c.lhs.is_zero() && c.rhs.is_zero());
            EXPECT_FALSE(c.lhs_source.empty());
            EXPECT_FALSE(c.rhs_source.empty());
        }
    }
    EXPECT_GT(failed, 0u);
    // Smooth curves have no node to get wrong.
    EXPECT_EQ(r.cells[0].status, CellStatus::pass);
}

TEST(VerifyGrid, TimeoutIsNeverPass)
{
    VerifyOptions opts;
    opts.timeout_seconds = 0.0;
    const auto r = verify_grid(1, 2, {Identity::hilb_support}, opts);
    EXPECT_EQ(r.count(CellStatus::timeout), r.cells.size());
    EXPECT_FALSE(r.passed());
}

TEST(VerifyGrid, SafetyBound)
{
    EXPECT_THROW(verify_grid(9, 12, {Identity::hilb_support}), BoundExceeded);
    EXPECT_THROW(verify_grid(2, 13, {Identity::hilb_support}), BoundExceeded);
    try {
        verify_grid(9, 12, {Identity::hilb_support});
    } catch (const BoundExceeded &e) {
        EXPECT_NE(std::string(e.what()).find("dimension"), std::string::npos);
    }
    VerifyOptions opts;
    opts.allow_large = true;
    EXPECT_TRUE(verify_grid(7, 0, {Identity::hilb_support}, opts).passed());
}

TEST(Report, JsonSchema)
{
    const auto r = verify_grid(1, 1, {Identity::lemma_B});
    const auto j = to_json(r);
    EXPECT_EQ(j["identities"], nlohmann::json::array({"lemma_B"}));
    EXPECT_EQ(j["grid"]["delta_max"], 1);
    EXPECT_EQ(j["grid"]["m_max"], 1);
    ASSERT_EQ(j["cells"].size(), 4u);
    for (const auto &c : j["cells"]) {
        for (const char *k : {"identity", "delta", "m", "status", "lhs", "rhs", "lhs_source", "rhs_source", "elapsed_ms"}) {
            EXPECT_TRUE(c.contains(k)) << k;
        }
        EXPECT_EQ(c["lhs"].get<WeightPoly>(), c["rhs"].get<WeightPoly>());
    }
    EXPECT_FALSE(j["notes"].empty());
    EXPECT_EQ(j["summary"]["pass"], 4);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["timeout"], 0);
    EXPECT_FALSE(to_json(r, false)["cells"][0].contains("elapsed_ms"));
}

TEST(Report, TextAndCsv)
{
    const auto r = verify_grid(1, 1, {Identity::hilb_support});
    const auto text = to_text(r);
    EXPECT_NE(text.find("hilb_support"), std::string::npos);
    EXPECT_NE(text.find("pass 4, fail 0, timeout 0"), std::string::npos);
    const auto csv = to_csv(r);
    EXPECT_EQ(csv.rfind("identity,delta,m,status,lhs,rhs,elapsed_ms\n", 0), 0u);
    EXPECT_NE(csv.find("hilb_support,1,1,pass,\"L\",\"L\""), std::string::npos);
}
