#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace starcore;
using testutil::s;

TEST(Rational, StoredReduced) {
    Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(format_rational(parse_rational("10/4")), "5/2");
    EXPECT_EQ(format_rational(parse_rational("-0/7")), "0");
}

TEST(Rational, Errors) {
    EXPECT_THROW(make_rational(1, 0), DivisionByZero);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1/"), ParseError);
    EXPECT_THROW(parse_rational("+1"), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(Rational, ArbitraryPrecision) {
    Rational big = parse_rational("123456789012345678901234567890/7");
    EXPECT_EQ(format_rational(big * 7), "123456789012345678901234567890");
}

TEST(GaussianRational, Add) {
    EXPECT_EQ(add(s("1/2"), s("1/2")), Scalar(1));
    Scalar z = s("3/4-2/5i");
    EXPECT_EQ(add(z, Scalar()), z);
    EXPECT_EQ(add(s("1+2i"), s("1-2i")), Scalar(2));
}

TEST(GaussianRational, MulConjInv) {
    EXPECT_EQ(mul(Scalar::i(), Scalar::i()), Scalar(-1));
    EXPECT_EQ(conj(s("3/4-2/5i")), s("3/4+2/5i"));
    Scalar w = inv(s("1+i"));
    EXPECT_EQ(w, s("1/2-1/2i"));
    EXPECT_EQ(s("1+i") * s("1/2-1/2i"), Scalar(1)); // the oracle: direct product
    EXPECT_THROW(inv(Scalar()), DivisionByZero);
    EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
}

TEST(GaussianRational, Format) {
    EXPECT_EQ(format_scalar(s("3/4-2/5i")), "3/4-2/5i");
    EXPECT_EQ(format_scalar(Scalar::i()), "i");
    EXPECT_EQ(format_scalar(-Scalar::i()), "-i");
    EXPECT_EQ(format_scalar(Scalar(0, 2)), "2i");
    EXPECT_EQ(format_scalar(Scalar(1, 1)), "1+i");
    EXPECT_EQ(format_scalar(Scalar(-1, -1)), "-1-i");
    EXPECT_EQ(format_scalar(Scalar()), "0");
    EXPECT_EQ(format_scalar(Scalar(make_rational(-7, 3))), "-7/3");
}

TEST(GaussianRational, Parse) {
    EXPECT_EQ(s("i"), Scalar(0, 1));
    EXPECT_EQ(s("-i"), Scalar(0, -1));
    EXPECT_EQ(s("2/3i"), Scalar(0, make_rational(2, 3)));
    EXPECT_EQ(s("1+-2i"), Scalar(1, -2));
    EXPECT_EQ(s("-1/2+i"), Scalar(make_rational(-1, 2), 1));
    for (const char* bad : {"", "i2", "1+", "1+2", "1 + i", "ii", "1/0i", "2/4/3", "--1", "1i+2"})
        EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
}

namespace {

std::vector<Scalar> sample_scalars(std::uint64_t seed, std::size_t count) {
    gen::Rng rng(seed);
    gen::EntryStyle style{20, 20, 60, 15};
    std::vector<Scalar> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(gen::random_scalar(rng, style));
    return out;
}

} // namespace

TEST(GaussianRational, FieldAxioms) {
    auto v = sample_scalars(11, 300);
    for (std::size_t k = 0; k + 2 < v.size(); ++k) {
        const Scalar &x = v[k], &y = v[k + 1], &z = v[k + 2];
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x - x, Scalar());
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inv(), Scalar(1));
        }
    }
}

TEST(GaussianRational, InvolutionAxioms) {
    auto v = sample_scalars(12, 300);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const Scalar &x = v[k], &y = v[k + 1];
        EXPECT_EQ(conj(conj(x)), x);
        EXPECT_EQ(conj(x + y), conj(x) + conj(y));
        EXPECT_EQ(conj(x * y), conj(y) * conj(x));
        EXPECT_TRUE((x * conj(x)).is_real());
    }
}

TEST(GaussianRational, RoundTrip) {
    for (const Scalar& z : sample_scalars(13, 1000)) EXPECT_EQ(parse_scalar(format_scalar(z)), z);
}
