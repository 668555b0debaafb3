#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace starcore;
using testutil::diag;
using testutil::mat;

TEST(Matrix, Star) {
    EXPECT_EQ(star(mat({{"i"}})), mat({{"-i"}}));
    EXPECT_EQ(star(mat({{"1", "2"}, {"3", "4"}})), mat({{"1", "3"}, {"2", "4"}}));
    EXPECT_EQ(star(mat({{"1+i", "0"}, {"2", "3-i"}})), mat({{"1-i", "2"}, {"0", "3+i"}}));
}

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(Matrix(2, 2) * Matrix(3, 1), DimensionMismatch);
    EXPECT_THROW(Matrix(2, 2) + Matrix(2, 3), DimensionMismatch);
    EXPECT_THROW(Matrix(2, 2, std::vector<Scalar>(3)), DimensionMismatch);
    EXPECT_THROW(inverse(Matrix(2, 3)), DimensionMismatch);
}

TEST(Matrix, Rank) {
    EXPECT_EQ(rank(Matrix(3, 3)), 0U);
    EXPECT_EQ(rank(Matrix::identity(3)), 3U);
    EXPECT_EQ(rank(mat({{"1", "1"}, {"1", "1"}})), 1U);
    EXPECT_EQ(rank(mat({{"1", "i"}, {"i", "-1"}})), 1U); // second row = i * first
}

TEST(Matrix, Inverse) {
    Matrix a = mat({{"1", "2"}, {"3", "4"}});
    EXPECT_EQ(inverse(a), mat({{"-2", "1"}, {"3/2", "-1/2"}}));
    EXPECT_THROW(inverse(mat({{"1", "1"}, {"1", "1"}})), SingularMatrix);
    EXPECT_EQ(inverse(mat({{"i"}})), mat({{"-i"}}));
}

TEST(FullRank, Examples) {
    auto f = full_rank_factorize(mat({{"1", "1"}, {"1", "1"}}));
    EXPECT_EQ(f.F, mat({{"1"}, {"1"}}));
    EXPECT_EQ(f.G, mat({{"1", "1"}}));
    EXPECT_EQ(f.F * f.G, mat({{"1", "1"}, {"1", "1"}}));
    EXPECT_EQ(rank(f.F), 1U);
    EXPECT_EQ(rank(f.G), 1U);

    auto id = full_rank_factorize(Matrix::identity(2));
    EXPECT_EQ(id.F, Matrix::identity(2));
    EXPECT_EQ(id.G, Matrix::identity(2));

    auto z = full_rank_factorize(Matrix(2, 2));
    EXPECT_EQ(z.rank, 0U);
    EXPECT_EQ(z.F.rows(), 2U);
    EXPECT_EQ(z.F.cols(), 0U);
    EXPECT_EQ(z.G.rows(), 0U);
    EXPECT_EQ(z.G.cols(), 2U);
    EXPECT_EQ(z.F * z.G, Matrix(2, 2));
}

TEST(FullRank, RandomReconstruction) {
    gen::Rng rng(2024);
    for (int t = 0; t < 500; ++t) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 8));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 8));
        Matrix a = gen::random_bounded(rng, rows, cols);
        auto f = full_rank_factorize(a);
        ASSERT_EQ(f.F * f.G, a) << a;
        EXPECT_EQ(f.F.cols(), f.rank);
        EXPECT_EQ(f.G.rows(), f.rank);
        EXPECT_EQ(rank(f.F), f.rank);
        EXPECT_EQ(rank(f.G), f.rank);
        EXPECT_EQ(rank(a), f.rank);
    }
}

TEST(Matrix, RankUnderInvolution) {
    gen::Rng rng(77);
    for (int t = 0; t < 300; ++t) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
        Matrix a = gen::random_bounded(rng, rows, cols);
        const std::size_t r = rank(a);
        EXPECT_EQ(rank(a.star()), r);
        EXPECT_EQ(rank(a.star() * a), r);
        EXPECT_EQ(star(star(a)), a);
        Matrix b = gen::random_bounded(rng, cols, rows);
        EXPECT_EQ(star(a * b), star(b) * star(a));
    }
}

TEST(Pierce, Examples) {
    Matrix x = mat({{"1", "2"}, {"3", "4"}});
    auto pb = pierce_decompose(x, diag({1, 0}));
    EXPECT_EQ(pb.pp, mat({{"1", "0"}, {"0", "0"}}));
    EXPECT_EQ(pb.pq, mat({{"0", "2"}, {"0", "0"}}));
    EXPECT_EQ(pb.qp, mat({{"0", "0"}, {"3", "0"}}));
    EXPECT_EQ(pb.qq, mat({{"0", "0"}, {"0", "4"}}));

    auto full = pierce_decompose(x, Matrix::identity(2));
    EXPECT_EQ(full.pp, x);
    EXPECT_TRUE(full.pq.is_zero() && full.qp.is_zero() && full.qq.is_zero());

    auto none = pierce_decompose(x, Matrix(2, 2));
    EXPECT_EQ(none.qq, x);
    EXPECT_TRUE(none.pp.is_zero() && none.pq.is_zero() && none.qp.is_zero());

    EXPECT_THROW(pierce_decompose(x, diag({2, 0})), NotIdempotent);
}

TEST(Pierce, RandomObliqueIdempotents) {
    gen::Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
        Matrix s = gen::random_invertible(rng, n);
        Matrix p = s * gen::pad(Matrix::identity(k), n) * inverse(s);
        Matrix x = gen::random_square(rng, n);
        auto pb = pierce_decompose(x, p);
        Matrix q = complement(p);
        EXPECT_EQ(pb.sum(), x);
        EXPECT_EQ(p * pb.pp * p, pb.pp);
        EXPECT_EQ(p * pb.pq * q, pb.pq);
        EXPECT_EQ(q * pb.qp * p, pb.qp);
        EXPECT_EQ(q * pb.qq * q, pb.qq);
    }
}

TEST(Projection, Examples) {
    EXPECT_TRUE(is_projection(diag({1, 0})));
    EXPECT_FALSE(is_projection(mat({{"1", "1"}, {"0", "0"}})));
    EXPECT_TRUE(is_idempotent(mat({{"1", "1"}, {"0", "0"}})));
    Matrix h = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});
    EXPECT_EQ(h * h, h);
    EXPECT_EQ(h.star(), h);
    EXPECT_TRUE(is_projection(h));
}

TEST(Solve, Right) {
    Matrix b = mat({{"1", "2/3"}, {"i", "0"}});
    EXPECT_EQ(solve_right(Matrix::identity(2), b), b);
    EXPECT_FALSE(solve_right(Matrix(2, 2), b).has_value());

    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    Matrix rhs = mat({{"2", "2"}, {"0", "0"}});
    auto x = solve_right(a, rhs);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x * a, rhs);
}

TEST(Solve, RandomConsistentSystems) {
    gen::Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        Matrix a = gen::random_square(rng, n);
        Matrix y = gen::random_bounded(rng, n, n);
        auto left = solve_left(a, a * y);
        ASSERT_TRUE(left.has_value());
        EXPECT_EQ(a * *left, a * y);
        auto right = solve_right(a, y * a);
        ASSERT_TRUE(right.has_value());
        EXPECT_EQ(*right * a, y * a);
    }
}

TEST(MatrixJson, RoundTripAndStrictness) {
    Matrix a = mat({{"1/2", "-i"}, {"3+4i", "0"}});
    json j = to_json(a);
    EXPECT_EQ(j.dump(), R"({"cols":2,"entries":[["1/2","-i"],["3+4i","0"]],"rows":2})");
    EXPECT_EQ(matrix_from_json(j), a);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[1]]})")), ParseError);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")), ParseError);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")), ParseError);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1})")), ParseError);
}
