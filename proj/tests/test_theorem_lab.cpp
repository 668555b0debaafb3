#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace starcore;
using namespace starcore::lab;
using testutil::diag;
using testutil::mat;
using testutil::s;

namespace {

Matrix m1(const char* v) { return mat({{v}}); }

Instance pair(Matrix a, Matrix b) { return Instance{std::move(a), std::move(b), std::nullopt, std::nullopt, Scalar(1)}; }

Instance blocks(Matrix a, Matrix b, Matrix c, Matrix d, Scalar lambda = Scalar(1)) {
    return Instance{std::move(a), std::move(b), std::move(c), std::move(d), std::move(lambda)};
}

void expect_first_failed(const TheoremReport& r, const std::string& name) {
    EXPECT_EQ(r.verdict, Verdict::HypothesisFailed) << r.detail;
    ASSERT_TRUE(r.first_failed_hypothesis().has_value());
    EXPECT_EQ(*r.first_failed_hypothesis(), name);
    EXPECT_TRUE(r.side1.empty());
    EXPECT_TRUE(r.side2.empty());
}

const Conjunct* find(const std::vector<Conjunct>& cs, const std::string& name) {
    for (const auto& c : cs)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST(TheoremIds, RoundTrip) {
    EXPECT_EQ(all_theorems.size(), 11U);
    for (TheoremId id : all_theorems) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(parse_theorem_id("T9.9").has_value());
    EXPECT_TRUE(is_two_sided(TheoremId::T3_1));
    EXPECT_FALSE(is_two_sided(TheoremId::C3_2));
}

TEST(Lemma21, Examples) {
    auto r = check_lemma_2_1(diag({1, 0}), diag({2, 3}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    auto id = check_lemma_2_1(Matrix::identity(2), mat({{"1", "2"}, {"0", "i"}}));
    EXPECT_EQ(id.verdict, Verdict::EquivalenceHolds);
    expect_first_failed(check_lemma_2_1(diag({1, 0}), mat({{"1", "1"}, {"0", "0"}})), "p a p^pi = 0");
}

TEST(Lemma22, Examples) {
    auto r = check_lemma_2_2(diag({1, 0}), mat({{"1", "0"}, {"1", "1"}}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    EXPECT_TRUE(r.side1_holds() && r.side2_holds());
    const Conjunct* formula = find(r.checks, "triangular formula equals general group inverse");
    ASSERT_NE(formula, nullptr);
    EXPECT_TRUE(formula->holds);

    auto both_false = check_lemma_2_2(diag({1, 0}), mat({{"0", "0"}, {"1", "0"}}));
    EXPECT_EQ(both_false.verdict, Verdict::EquivalenceHolds);
    EXPECT_FALSE(both_false.side1_holds());
    EXPECT_FALSE(both_false.side2_holds());
    EXPECT_EQ(both_false.detail, "both sides fail");

    expect_first_failed(check_lemma_2_2(mat({{"1", "1"}, {"0", "0"}}), Matrix::identity(2)), "p is a projection");
}

TEST(Lemma23, Examples) {
    auto r = check_lemma_2_3(diag({1, 0}), mat({{"1", "0"}, {"1", "1"}}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    ASSERT_NE(find(r.checks, "constructed core inverse equals general core inverse"), nullptr);
    expect_first_failed(check_lemma_2_3(diag({1, 0}), mat({{"0", "0"}, {"1", "0"}})), "(ap^pi)^pi p^pi a p = 0");
}

TEST(Lemma24, Examples) {
    auto r = check_lemma_2_4(diag({1, 0}), diag({0, 1}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    EXPECT_TRUE(r.side1_holds() && r.side2_holds());
    auto ii = check_lemma_2_4(Matrix::identity(2), Matrix::identity(2));
    EXPECT_TRUE(ii.side1_holds() && ii.side2_holds());
    expect_first_failed(check_lemma_2_4(mat({{"0", "1"}, {"0", "0"}}), Matrix::identity(2)), "a is EP");

    const Conjunct* vac = find(r.hypotheses, "a^pi b has a Drazin inverse");
    ASSERT_NE(vac, nullptr);
    EXPECT_FALSE(vac->gating);
    EXPECT_FALSE(vac->note.empty());
}

TEST(Theorem31, Examples) {
    auto r = check_theorem_3_1(diag({1, 0, 0}), diag({0, 1, 0}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    EXPECT_TRUE(r.side1_holds() && r.side2_holds());
    auto ii = check_theorem_3_1(Matrix::identity(2), Matrix::identity(2));
    EXPECT_TRUE(ii.side1_holds() && ii.side2_holds());
    expect_first_failed(check_theorem_3_1(diag({1, 0}), mat({{"0", "1"}, {"0", "0"}})), "b is EP");

    // a = -b: a + b = 0 is core invertible but a (a+b)^core a^pi = 0 trivially; both sides hold
    auto neg = check_theorem_3_1(diag({1, 0}), diag({-1, 0}));
    EXPECT_EQ(neg.verdict, Verdict::EquivalenceHolds);
}

TEST(Theorem31, BothSidesFail) {
    // a invertible, b = -a + N: a^pi = b^pi = 0 and a + b = N is nilpotent
    auto r = check_theorem_3_1(Matrix::identity(2), mat({{"-1", "1"}, {"0", "-1"}}));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    EXPECT_FALSE(r.side1_holds());
    EXPECT_FALSE(r.side2_holds());
    EXPECT_EQ(r.side1.front().name, "a+b is core invertible");
    EXPECT_FALSE(r.side1.front().holds);
    EXPECT_EQ(r.side1[1].note, "not evaluated: previous conjunct failed");
}

TEST(Corollary32, Examples) {
    auto same = check_corollary_3_2(diag({1, 0}), diag({1, 0}));
    EXPECT_EQ(same.verdict, Verdict::EquivalenceHolds);
    EXPECT_EQ(check_corollary_3_2(Matrix::identity(2), Matrix::identity(2)).verdict, Verdict::EquivalenceHolds);
    EXPECT_EQ(check_corollary_3_2(diag({1, 0}), diag({0, 1})).verdict, Verdict::EquivalenceHolds);
    expect_first_failed(check_corollary_3_2(diag({1, 0}), mat({{"1", "1"}, {"1", "1"}})), "a a^# b = b b^# a");
}

TEST(Corollary33, Examples) {
    EXPECT_EQ(check_corollary_3_3(diag({1, 0, 2}), diag({3, 0, -2})).verdict, Verdict::EquivalenceHolds);
    auto zero_sum = check_corollary_3_3(diag({1, 2}), diag({-1, 5}));
    EXPECT_EQ(zero_sum.verdict, Verdict::EquivalenceHolds);
    const Matrix ep = mat({{"1", "i"}, {"-i", "1"}});
    EXPECT_EQ(check_corollary_3_3(Matrix::identity(2), ep).verdict, Verdict::EquivalenceHolds);
    expect_first_failed(check_corollary_3_3(diag({1, 0}), mat({{"1", "1"}, {"1", "1"}})), "ab = ba");
    auto both_false = check_corollary_3_3(Matrix::identity(2), mat({{"-1", "1"}, {"0", "-1"}}));
    EXPECT_EQ(both_false.verdict, Verdict::EquivalenceHolds);
    EXPECT_FALSE(both_false.side1_holds());
    EXPECT_FALSE(both_false.side2_holds());
}

TEST(Lemma41, Examples) {
    auto r = check_lemma_4_1(m1("1"), std::nullopt, m1("1"), m1("1"));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    auto c0 = check_lemma_4_1(diag({2, 0}), std::nullopt, Matrix(1, 2), m1("3"));
    EXPECT_EQ(c0.verdict, Verdict::EquivalenceHolds);
    expect_first_failed(check_lemma_4_1(m1("1"), std::nullopt, mat({{"0"}, {"1"}}), diag({1, 0})), "D^pi C = 0");
}

TEST(Lemma42, Examples) {
    EXPECT_EQ(check_lemma_4_2(diag({1, 0}), diag({0, 2}), Scalar(1)).verdict, Verdict::EquivalenceHolds);
    EXPECT_EQ(check_lemma_4_2(Matrix::identity(2), Matrix::identity(2), Scalar(1)).verdict,
              Verdict::EquivalenceHolds);
    expect_first_failed(check_lemma_4_2(mat({{"0", "1"}, {"0", "0"}}), Matrix::identity(2), Scalar(1)), "A is EP");
    EXPECT_THROW(check_lemma_4_2(Matrix::identity(2), Matrix::identity(2), Scalar()), ZeroLambda);

    // anticommuting Hermitian pair, lambda = -1
    auto anti = check_lemma_4_2(diag({1, -1}), mat({{"0", "1"}, {"1", "0"}}), Scalar(-1));
    EXPECT_EQ(anti.verdict, Verdict::EquivalenceHolds) << anti.detail;
}

TEST(Theorem43, Examples) {
    auto r = check_theorem_4_3(m1("1"), m1("1"), m1("1"), m1("1"), Scalar(1));
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds) << r.detail;
    auto neg = check_theorem_4_3(m1("1"), m1("1"), m1("1"), m1("-1"), Scalar(-1));
    EXPECT_EQ(neg.verdict, Verdict::EquivalenceHolds) << neg.detail;
    for (const char* name : {"Q^D = Q (Q^2)^D", "Q Q^pi = 0", "(Q Q^#)* = Q Q^#", "PQ = lambda QP"}) {
        const Conjunct* c = find(neg.checks, name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_TRUE(c->holds) << name;
    }
    // B = C = 0 with A, D invertible: (BC)^pi = I so the first range condition fails
    expect_first_failed(check_theorem_4_3(m1("1"), m1("0"), m1("0"), m1("2"), Scalar(1)), "(BC)^pi A = 0");
    expect_first_failed(check_theorem_4_3(m1("0"), m1("0"), m1("1"), m1("0"), Scalar(1)), "C (BC)^pi = 0");
    EXPECT_THROW(check_theorem_4_3(m1("1"), m1("1"), m1("1"), m1("1"), Scalar()), ZeroLambda);
    EXPECT_THROW(check_theorem_4_3(m1("1"), Matrix(1, 2), m1("1"), m1("1"), Scalar(1)), DimensionMismatch);
}

TEST(Theorem43, CbEpIsRecordedNotRequired) {
    const Matrix b = diag({1, 0});
    const Matrix c = mat({{"1", "0"}, {"1", "0"}});
    auto r = check_theorem_4_3(Matrix(2, 2), b, c, Matrix(2, 2), Scalar(1));
    ASSERT_NE(r.verdict, Verdict::HypothesisFailed) << r.detail;
    const Conjunct* cb = find(r.hypotheses, "CB is EP");
    ASSERT_NE(cb, nullptr);
    EXPECT_FALSE(cb->holds);
    EXPECT_FALSE(cb->gating);
    EXPECT_EQ(find(r.checks, "(Q Q^#)* = Q Q^#"), nullptr);
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds) << r.detail;
}

TEST(Corollary44, Examples) {
    EXPECT_EQ(check_corollary_4_4(m1("1"), m1("1"), m1("1"), m1("-1"), Scalar(-1)).verdict,
              Verdict::EquivalenceHolds);
    expect_first_failed(check_corollary_4_4(m1("1"), m1("0"), m1("0"), m1("1"), Scalar(1)), "BC is invertible");
}

// The stated hypotheses of the block results do not force M to be core
// invertible. Both instances satisfy every hypothesis (BC is even
// invertible) and M has index 2; the checkers must say so.
TEST(BlockResults, StatedHypothesesAdmitIndexTwoM) {
    struct Case {
        Matrix a, b, c, d;
        Scalar lambda;
    };
    const Matrix j = mat({{"1", "1"}, {"0", "1"}});
    const std::vector<Case> cases{
        {m1("1"), m1("1"), m1("-1"), m1("-1"), Scalar(-1)},
        {j, Matrix::identity(2), Matrix::identity(2), j, Scalar(1)},
    };
    for (const auto& k : cases) {
        const Matrix m = assemble(k.a, k.b, k.c, k.d);
        ASSERT_EQ(drazin_index(m), 2U);
        for (const auto& r : {check_theorem_4_3(k.a, k.b, k.c, k.d, k.lambda),
                              check_corollary_4_4(k.a, k.b, k.c, k.d, k.lambda)}) {
            EXPECT_EQ(r.verdict, Verdict::Violation);
            EXPECT_FALSE(r.first_failed_hypothesis().has_value());
            EXPECT_EQ(r.detail, "hypotheses hold but conclusion fails at 'M = [[A, B], [C, D]] is core invertible'");
            for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << c.name;
            const Conjunct* s_core = find(r.hypotheses, "PP^# Q + QQ^# P is core invertible");
            ASSERT_NE(s_core, nullptr);
            EXPECT_FALSE(s_core->holds);
            const Conjunct* corner = find(r.hypotheses, "AA^# B = 0");
            ASSERT_NE(corner, nullptr);
            EXPECT_FALSE(corner->holds);
        }
    }
}

TEST(Dispatch, CheckByIdAndMissingBlocks) {
    auto r = check(TheoremId::T3_1, pair(diag({1, 0, 0}), diag({0, 1, 0})));
    EXPECT_EQ(r.theorem, TheoremId::T3_1);
    EXPECT_EQ(r.verdict, Verdict::EquivalenceHolds);
    EXPECT_THROW(check(TheoremId::T4_3, pair(m1("1"), m1("1"))), DimensionMismatch);
    EXPECT_THROW(check(TheoremId::T3_1, pair(Matrix::identity(2), Matrix::identity(3))), DimensionMismatch);
    auto b = check(TheoremId::T4_3, blocks(m1("1"), m1("1"), m1("1"), m1("-1"), Scalar(-1)));
    EXPECT_EQ(b.verdict, Verdict::EquivalenceHolds);
}

TEST(ReportJson, Shape) {
    auto r = check_theorem_3_1(diag({1, 0}), mat({{"0", "1"}, {"0", "0"}}));
    json j = to_json(r);
    EXPECT_EQ(j["theorem"], "T3.1");
    EXPECT_EQ(j["verdict"], "HypothesisFailed");
    EXPECT_EQ(j["first_failed_hypothesis"], "b is EP");
    EXPECT_FALSE(j.contains("side1_holds"));

    auto ok = to_json(check_theorem_3_1(diag({1, 0, 0}), diag({0, 1, 0})));
    EXPECT_EQ(ok["verdict"], "EquivalenceHolds");
    EXPECT_TRUE(ok["first_failed_hypothesis"].is_null());
    EXPECT_EQ(ok["side1_holds"], true);
    EXPECT_EQ(ok["side2_holds"], true);
    EXPECT_EQ(ok["side2"].size(), 3U);
}

TEST(ReportJson, InstanceRoundTrip) {
    const Instance block = blocks(m1("1"), mat({{"1", "i"}}), mat({{"2"}, {"1/2"}}), Matrix::identity(2), s("-i"));
    for (TheoremId id : {TheoremId::T4_3, TheoremId::C4_4, TheoremId::L4_1}) {
        json j = to_json(id, block);
        EXPECT_TRUE(j.contains("A") && j.contains("D"));
        Instance back = instance_from_json(id, j);
        EXPECT_EQ(back.a, block.a);
        EXPECT_EQ(back.b, block.b);
        EXPECT_EQ(*back.c, *block.c);
        EXPECT_EQ(*back.d, *block.d);
    }
    EXPECT_EQ(instance_from_json(TheoremId::T4_3, to_json(TheoremId::T4_3, block)).lambda, s("-i"));

    const Instance px = pair(diag({1, 0}), mat({{"1", "0"}, {"1", "1"}}));
    json j = to_json(TheoremId::L2_2, px);
    EXPECT_TRUE(j.contains("p") && j.contains("x"));
    EXPECT_EQ(instance_from_json(TheoremId::L2_2, j).b, px.b);
    EXPECT_THROW(instance_from_json(TheoremId::T3_1, j), ParseError);
}
