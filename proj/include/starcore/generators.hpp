#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starcore/theorem_lab.hpp"

namespace starcore::gen {

inline constexpr int max_retries = 100;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

// Independent stream for (seed, stream, index); identical inputs give
// identical draws on every platform. Bounded draws use plain modular
// reduction rather than <random> distributions, whose output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : engine_(splitmix64(seed ^ splitmix64(stream * 0x100000001B3ULL + splitmix64(index)))) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (hi < lo) throw InternalError("empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool chance(long num, long den) { return uniform(1, den) <= num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[index(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Scalars and basic matrices
// ---------------------------------------------------------------------------

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
    return make_rational(rng.uniform(-num_bound, num_bound), rng.uniform(1, den_bound));
}

struct EntryStyle {
    long num_bound = 3;
    long den_bound = 1;
    int complex_percent = 25; // chance that an entry gets an imaginary part
    int zero_percent = 0;     // extra chance of an exact zero
};

inline Scalar random_scalar(Rng& rng, const EntryStyle& style) {
    if (style.zero_percent > 0 && rng.chance(style.zero_percent, 100)) return Scalar(0);
    Rational re = random_rational(rng, style.num_bound, style.den_bound);
    if (style.complex_percent > 0 && rng.chance(style.complex_percent, 100))
        return {re, random_rational(rng, style.num_bound, style.den_bound)};
    return Scalar(re);
}

inline Scalar random_nonzero_scalar(Rng& rng, const EntryStyle& style) {
    for (;;) {
        Scalar s = random_scalar(rng, {style.num_bound, style.den_bound, style.complex_percent, 0});
        if (!s.is_zero()) return s;
    }
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const EntryStyle& style = {}) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, style);
    return m;
}

// Always invertible: P L U with unit-diagonal L and nonzero-diagonal U.
inline Matrix random_invertible(Rng& rng, std::size_t n, const EntryStyle& style = {}) {
    Matrix l = Matrix::identity(n);
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i) l(i, j) = random_scalar(rng, style);
            if (j > i) u(i, j) = random_scalar(rng, style);
        }
        u(i, i) = random_nonzero_scalar(rng, style);
    }
    Matrix perm(n, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = 1;
    return perm * l * u;
}

inline Matrix random_full_column_rank(Rng& rng, std::size_t rows, std::size_t r, const EntryStyle& style = {}) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Matrix q = random_matrix(rng, rows, r, style);
        if (rank(q) == r) return q;
    }
    throw GenerationExhausted("no full column rank " + std::to_string(rows) + "x" + std::to_string(r) +
                              " matrix after " + std::to_string(max_retries) + " draws");
}

// Rank exactly r (r <= min(rows, cols)).
inline Matrix random_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r,
                                 const EntryStyle& style = {}) {
    if (r == 0) return Matrix(rows, cols);
    return random_full_column_rank(rng, rows, r, style) * random_full_column_rank(rng, cols, r, style).transpose();
}

inline Matrix nilpotent_jordan(std::size_t k) {
    Matrix j(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = 1;
    return j;
}

inline Matrix strictly_upper(Rng& rng, std::size_t n, const EntryStyle& style = {}) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = random_scalar(rng, style);
    return m;
}

// Random square matrix with index <= 1 and the requested rank (resampled).
inline Matrix random_index_one(Rng& rng, std::size_t n, std::size_t r, const EntryStyle& style = {}) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Matrix m = random_rank_matrix(rng, n, n, r, style);
        if (is_group_invertible(m)) return m;
    }
    throw GenerationExhausted("no index-one matrix of rank " + std::to_string(r));
}

// ---------------------------------------------------------------------------
// Rational unitaries
// ---------------------------------------------------------------------------

// [[a, -conj(b)], [b, conj(a)]] / c with |a|^2 + |b|^2 = c^2 over the
// Gaussian integers; the real rows are Pythagorean-triple rotations.
struct UnitaryBlock {
    Scalar a;
    Scalar b;
    long c;
};

inline const std::vector<UnitaryBlock>& unitary_blocks() {
    static const std::vector<UnitaryBlock> blocks{
        {Scalar(3), Scalar(4), 5},
        {Scalar(4), Scalar(3), 5},
        {Scalar(5), Scalar(12), 13},
        {Scalar(8), Scalar(15), 17},
        {Scalar(20), Scalar(21), 29},
        {Scalar(Rational(1), Rational(1)), Scalar(Rational(1), Rational(1)), 2},
        {Scalar(Rational(1), Rational(2)), Scalar(2), 3},
        {Scalar(Rational(2), Rational(1)), Scalar(Rational(0), Rational(2)), 3},
    };
    return blocks;
}

inline Matrix rational_unitary(Rng& rng, std::size_t n) {
    Matrix u = Matrix::identity(n);
    if (n == 0) return u;
    // signed permutation with phases in {1, i, -1, -i}
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    static const std::vector<Scalar> phases{Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
    Matrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = rng.pick(phases);
    u = perm;
    const std::size_t rotations = n >= 2 ? n : 0;
    for (std::size_t k = 0; k < rotations; ++k) {
        std::size_t i = rng.index(n);
        std::size_t j = rng.index(n - 1);
        if (j >= i) ++j;
        const auto& blk = rng.pick(unitary_blocks());
        const Scalar c_inv = Scalar(make_rational(1, blk.c));
        Matrix g = Matrix::identity(n);
        g(i, i) = blk.a * c_inv;
        g(i, j) = -blk.b.conj() * c_inv;
        g(j, i) = blk.b * c_inv;
        g(j, j) = blk.a.conj() * c_inv;
        u = g * u;
    }
    return u;
}

// ---------------------------------------------------------------------------
// Instance families
// ---------------------------------------------------------------------------

// Q S Q* with Q full column rank r and S invertible: EP of rank r.
inline Matrix ep_matrix(Rng& rng, std::size_t n, std::size_t r) {
    if (r > n) throw DimensionMismatch("ep rank " + std::to_string(r) + " exceeds size " + std::to_string(n));
    if (r == 0) return Matrix(n, n);
    const EntryStyle style{2, 1, 25, 20};
    Matrix q = random_full_column_rank(rng, n, r, style);
    Matrix s = random_invertible(rng, r, style);
    return q * s * q.star();
}

// Unrestricted square matrix mixing dense, sparse, nilpotent, low-rank and
// Jordan-structured draws so that every index from 1 to n shows up.
inline Matrix random_square(Rng& rng, std::size_t n) {
    if (n == 0) return Matrix();
    const EntryStyle dense{5, 3, 25, 0};
    const EntryStyle sparse{3, 1, 25, 60};
    switch (rng.uniform(0, 5)) {
    case 0: return random_matrix(rng, n, n, dense);
    case 1: return random_matrix(rng, n, n, sparse);
    case 2: return strictly_upper(rng, n, sparse);
    case 3: return random_rank_matrix(rng, n, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n))),
                                      EntryStyle{2, 1, 25, 30});
    case 4: {
        // S (J_k (+) E) S^-1 with a nilpotent Jordan block J_k
        const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        Matrix e = random_matrix(rng, n - k, n - k, sparse);
        Matrix s = random_invertible(rng, n, EntryStyle{1, 1, 20, 50});
        return s * block_diagonal(nilpotent_jordan(k), e) * inverse(s);
    }
    default: {
        // duplicate rows of a sparse draw
        Matrix m = random_matrix(rng, n, n, sparse);
        for (std::size_t i = 1; i < n; ++i)
            if (rng.chance(1, 3)) {
                std::size_t src = rng.index(i);
                for (std::size_t j = 0; j < n; ++j) m(i, j) = m(src, j);
            }
        return m;
    }
    }
}

// rows x cols with every entry num/den, |num|, den <= 20 (real and
// imaginary parts alike). Structural modes produce rank deficiency and
// nilpotency without leaving the entry bound.
inline Matrix random_bounded(Rng& rng, std::size_t rows, std::size_t cols) {
    const EntryStyle dense{20, 20, 30, 0};
    const EntryStyle sparse{20, 20, 30, 55};
    switch (rng.uniform(0, 4)) {
    case 0: return random_matrix(rng, rows, cols, dense);
    case 1: return random_matrix(rng, rows, cols, sparse);
    case 2: {
        Matrix m = random_matrix(rng, rows, cols, sparse);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j <= i && j < cols; ++j) m(i, j) = 0;
        // optionally plant a nonsingular trailing block
        if (rows == cols && rows > 1 && rng.chance(1, 2)) {
            std::size_t k = rng.index(rows);
            for (std::size_t i = k; i < rows; ++i) m(i, i) = random_nonzero_scalar(rng, dense);
        }
        return m;
    }
    case 3: {
        Matrix m = random_matrix(rng, rows, cols, dense);
        for (std::size_t i = 1; i < rows; ++i)
            if (rng.chance(1, 2)) {
                std::size_t src = rng.index(i);
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(src, j);
            }
        return m;
    }
    default: {
        Matrix m = random_matrix(rng, rows, cols, dense);
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.chance(1, 3))
                for (std::size_t i = 0; i < rows; ++i) m(i, j) = 0;
        return m;
    }
    }
}

inline Matrix conjugate_by(const Matrix& u, const Matrix& m) { return u * m * u.star(); }

// Pad an n-k block with zeros to size n.
inline Matrix pad(const Matrix& m, std::size_t n) { return block_diagonal(m, Matrix(n - m.rows(), n - m.cols())); }

struct PairVariant {
    enum Kind { diagonal, equal_on_overlap, shifted, shared_block } kind;
};

// a = U diag(sa) U*, b = U diag(sb) U* (commuting normal EP pair), or the
// "shifted" pair a = U diag(A, 0) U*, b = U diag(beta I, B2, 0) U* with A
// possibly of the form -beta I + N (N nilpotent) so that a+b has index > 1.
inline std::pair<Matrix, Matrix> commuting_ep_pair(Rng& rng, std::size_t n, PairVariant::Kind kind) {
    const EntryStyle style{3, 2, 30, 0};
    const Matrix u = rational_unitary(rng, n);
    if (kind == PairVariant::diagonal || kind == PairVariant::equal_on_overlap || n < 2) {
        std::vector<Scalar> sa(n);
        std::vector<Scalar> sb(n);
        for (std::size_t i = 0; i < n; ++i) {
            const long pattern = rng.uniform(0, 3); // 0: neither, 1: a only, 2: b only, 3: both
            if (pattern == 1 || pattern == 3) sa[i] = random_nonzero_scalar(rng, style);
            if (pattern == 2 || pattern == 3) sb[i] = random_nonzero_scalar(rng, style);
            if (pattern == 3 && kind == PairVariant::equal_on_overlap) sb[i] = sa[i];
        }
        return {conjugate_by(u, Matrix::diagonal(sa)), conjugate_by(u, Matrix::diagonal(sb))};
    }
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    const auto l = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k)));
    const Scalar beta = random_nonzero_scalar(rng, style);
    Matrix a_block = rng.chance(1, 2) ? random_invertible(rng, k, EntryStyle{2, 1, 25, 0})
                                      : -beta * Matrix::identity(k) + strictly_upper(rng, k, EntryStyle{2, 1, 25, 30});
    Matrix b2 = random_invertible(rng, l, EntryStyle{2, 1, 25, 0});
    Matrix a = pad(a_block, n);
    Matrix b = pad(block_diagonal(beta * Matrix::identity(k), b2), n);
    return {conjugate_by(u, a), conjugate_by(u, b)};
}

// a = U diag(A, A2, 0, 0) U*, b = U diag(B, 0, B3, 0) U* with A, B invertible
// on a shared block; B is sometimes -A + N so that A + B is singular.
inline std::pair<Matrix, Matrix> shared_block_ep_pair(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 0};
    const Matrix u = rational_unitary(rng, n);
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    const auto k2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k)));
    const auto k3 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k - k2)));
    const std::size_t rest = n - k - k2 - k3;
    Matrix a1 = random_invertible(rng, k, style);
    Matrix b1 = rng.chance(1, 2) ? random_invertible(rng, k, style)
                                 : -a1 + strictly_upper(rng, k, EntryStyle{2, 1, 25, 40});
    Matrix a = block_diagonal(block_diagonal(a1, random_invertible(rng, k2, style)), Matrix(k3 + rest, k3 + rest));
    Matrix b = block_diagonal(block_diagonal(b1, Matrix(k2, k2)),
                              block_diagonal(random_invertible(rng, k3, style), Matrix(rest, rest)));
    return {conjugate_by(u, a), conjugate_by(u, b)};
}

// a = U diag(S, A2, 0, 0) U*, b = U diag(S, 0, B3, 0) U*: a a^# b = b b^# a = U diag(S, 0, 0, 0) U*
// with S an arbitrary (typically non-normal) EP block.
inline std::pair<Matrix, Matrix> overlapping_ep_pair(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 20};
    const Matrix u = rational_unitary(rng, n);
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    const auto k2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k)));
    const auto k3 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k - k2)));
    const std::size_t rest = n - k - k2 - k3;
    Matrix s = rng.chance(1, 2) ? random_invertible(rng, k, style)
                                : ep_matrix(rng, k, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k))));
    Matrix a = block_diagonal(block_diagonal(s, random_invertible(rng, k2, style)), Matrix(k3 + rest, k3 + rest));
    Matrix b = block_diagonal(block_diagonal(s, Matrix(k2, k2)),
                              block_diagonal(random_invertible(rng, k3, style), Matrix(rest, rest)));
    return {conjugate_by(u, a), conjugate_by(u, b)};
}

// a = U diag(A1, 0) U* (EP), b = U [[b1, 0], [b3, b4]] U* so that a b a^pi = 0.
inline std::pair<Matrix, Matrix> ep_triangular_pair(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 30};
    const Matrix u = rational_unitary(rng, n);
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    const std::size_t l = n - k;
    Matrix a = pad(random_invertible(rng, k, style), n);
    Matrix b1 = random_rank_matrix(rng, k, k, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k))), style);
    if (rng.chance(1, 3)) b1 = random_invertible(rng, k, style);
    Matrix b4 = random_rank_matrix(rng, l, l, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(l))), style);
    Matrix b3 = random_matrix(rng, l, k, style);
    if (rng.chance(1, 2)) b3 = b4 * random_matrix(rng, l, k, style); // keeps b^pi a^pi b = 0 likely
    Matrix b = assemble(b1, Matrix(k, l), b3, b4);
    return {conjugate_by(u, a), conjugate_by(u, b)};
}

// x = U [[a1, 0], [b, d]] U* relative to p = U diag(I_k, 0) U*. With
// `range_condition`, b = d Y so that (x p^pi)^pi p^pi x p = 0.
inline std::pair<Matrix, Matrix> triangular_pair(Rng& rng, std::size_t n, bool range_condition) {
    const EntryStyle style{2, 1, 25, 30};
    const Matrix u = rational_unitary(rng, n);
    const auto k = static_cast<std::size_t>(rng.uniform(n > 1 ? 1 : 0, static_cast<long>(n)));
    const std::size_t l = n - k;
    Matrix a1 = random_index_one(rng, k, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k))), style);
    Matrix d;
    if (range_condition || rng.chance(2, 3))
        d = random_index_one(rng, l, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(l))), style);
    else
        d = random_square(rng, l);
    Matrix b;
    if (range_condition) {
        b = d * random_matrix(rng, l, k, style);
    } else {
        switch (rng.uniform(0, 2)) {
        case 0: b = random_matrix(rng, l, k, style); break;
        case 1: b = d * random_matrix(rng, l, k, style) + random_matrix(rng, l, k, style) * a1; break;
        default: b = Matrix(l, k); break;
        }
    }
    Matrix p = conjugate_by(u, pad(Matrix::identity(k), n));
    Matrix x = conjugate_by(u, assemble(a1, Matrix(k, l), b, d));
    return {p, x};
}

// Oblique idempotent p = S diag(I_k, 0) S^-1 and a with p a p^pi = 0.
inline std::pair<Matrix, Matrix> idempotent_triangular_pair(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 30};
    const Matrix s = random_invertible(rng, n, EntryStyle{1, 1, 20, 40});
    const Matrix s_inv = inverse(s);
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    const std::size_t l = n - k;
    Matrix a1 = random_index_one(rng, k, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k))), style);
    Matrix a4 = random_index_one(rng, l, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(l))), style);
    Matrix a3 = rng.chance(1, 2) ? a4 * random_matrix(rng, l, k, style) : random_matrix(rng, l, k, style);
    Matrix p = s * pad(Matrix::identity(k), n) * s_inv;
    Matrix a = s * assemble(a1, Matrix(k, l), a3, a4) * s_inv;
    return {p, a};
}

struct BlockInstance {
    Matrix a, b, c, d;
    Scalar lambda{1};
};

// An invertible K commuting (lambda^2 = 1) or anticommuting (lambda^2 = -1)
// with a.
inline std::optional<Matrix> compatible_core(Rng& rng, const Matrix& a, bool anticommute) {
    const std::size_t n = a.rows();
    if (anticommute) return std::nullopt;
    const EntryStyle style{3, 1, 20, 0};
    Matrix k = random_nonzero_scalar(rng, style) * Matrix::identity(n);
    if (rng.chance(1, 2)) k += random_scalar(rng, style) * a;
    if (rng.chance(1, 3)) k += random_scalar(rng, style) * a * a;
    if (!is_invertible(k)) return std::nullopt;
    return k;
}

// m = n block family: B = s U (or any invertible B when A is invertible),
// C = B^-1 K, D = lambda^-1 B^-1 A B. With lambda = +-1, K commutes with
// A; with lambda = +-i, A = diag(A1, -A1) and K = [[0, I], [I, 0]]
// anticommute.
inline BlockInstance invertible_block_instance(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 20};
    BlockInstance out;
    const bool anticommute = n % 2 == 0 && rng.chance(1, 4);
    std::optional<Matrix> k;
    for (int attempt = 0; attempt < max_retries && !k; ++attempt) {
        if (anticommute) {
            const std::size_t h = n / 2;
            Matrix a1 = rng.chance(1, 2) ? random_invertible(rng, h, style) : ep_matrix(rng, h, rng.index(h + 1));
            out.a = block_diagonal(a1, -a1);
            k = assemble(Matrix(h, h), Matrix::identity(h), Matrix::identity(h), Matrix(h, h));
            out.lambda = rng.chance(1, 2) ? Scalar::i() : -Scalar::i();
        } else {
            out.a = ep_matrix(rng, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n))));
            k = compatible_core(rng, out.a, false);
            out.lambda = rng.chance(1, 2) ? Scalar(1) : Scalar(-1);
        }
    }
    if (!k) throw GenerationExhausted("no invertible commuting core for the block family");
    const Matrix u = rational_unitary(rng, n);
    if (is_invertible(out.a) && rng.chance(1, 2))
        out.b = random_invertible(rng, n, style);
    else
        out.b = random_nonzero_scalar(rng, EntryStyle{2, 1, 0, 0}) * u;
    const Matrix b_inv = inverse(out.b);
    out.c = b_inv * *k;
    out.d = out.lambda.inv() * (b_inv * out.a * out.b);
    return out;
}

// Singular BC: everything supported on a k-dimensional corner, embedded by
// unitaries U (m x m) and V (n x n).
inline BlockInstance singular_block_instance(Rng& rng, std::size_t m, std::size_t n) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(std::min(m, n))));
    BlockInstance core = invertible_block_instance(rng, k);
    const Matrix u = rational_unitary(rng, m);
    const Matrix v = rational_unitary(rng, n);
    BlockInstance out;
    out.lambda = core.lambda;
    out.a = conjugate_by(u, pad(core.a, m));
    out.d = conjugate_by(v, pad(core.d, n));
    out.b = u * block_diagonal(core.b, Matrix(m - k, n - k)) * v.star();
    out.c = v * block_diagonal(core.c, Matrix(n - k, m - k)) * u.star();
    return out;
}

// (A, B, lambda) with AB = lambda BA, A and B EP. lambda = 1 reuses the
// commuting pairs; lambda = -1 uses A = diag(A1, -A1), B = [[0, S], [T, 0]]
// with S, T commuting with A1; lambda = +-i uses 4x4 clock and shift
// blocks. Blocks are padded and conjugated by a unitary.
inline BlockInstance lambda_pair_instance(Rng& rng, std::size_t n) {
    const EntryStyle style{2, 1, 25, 0};
    BlockInstance out;
    const long mode = rng.uniform(0, 2);
    if (mode == 1 && n >= 2) {
        const std::size_t h = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n / 2)));
        Matrix a1 = random_invertible(rng, h, style);
        Matrix s = Matrix::identity(h);
        Matrix t = random_nonzero_scalar(rng, style) * Matrix::identity(h);
        if (rng.chance(1, 2)) t += random_scalar(rng, style) * a1;
        if (!is_invertible(t)) t = Matrix::identity(h);
        const std::size_t rest = n - 2 * h;
        Matrix a = pad(block_diagonal(a1, -a1), n);
        Matrix b = assemble(Matrix(h, h), s, t, Matrix(h, h));
        Matrix b3 = rest > 0 && rng.chance(1, 2) ? random_invertible(rng, rest, style) : Matrix(rest, rest);
        b = block_diagonal(b, b3);
        const Matrix u = rational_unitary(rng, n);
        out.a = conjugate_by(u, a);
        out.b = conjugate_by(u, b);
        out.lambda = Scalar(-1);
        return out;
    }
    if (mode == 2 && n >= 4) {
        Matrix clock = Matrix::diagonal({Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()});
        Matrix shift(4, 4);
        for (std::size_t j = 0; j < 4; ++j) shift((j + 1) % 4, j) = 1;
        // clock * shift = i * shift * clock
        Matrix a = random_nonzero_scalar(rng, style) * clock;
        Matrix b = random_nonzero_scalar(rng, style) * shift;
        out.lambda = Scalar::i();
        if (rng.chance(1, 2)) {
            std::swap(a, b);
            out.lambda = -Scalar::i();
        }
        const Matrix u = rational_unitary(rng, n);
        out.a = conjugate_by(u, pad(a, n));
        out.b = conjugate_by(u, pad(b, n));
        return out;
    }
    auto [a, b] = commuting_ep_pair(rng, n, rng.chance(1, 2) ? PairVariant::shifted : PairVariant::diagonal);
    out.a = std::move(a);
    out.b = std::move(b);
    out.lambda = Scalar(1);
    return out;
}

// Lower block triangular [[A, 0], [C, D]] data with D^pi C = 0.
inline BlockInstance block_triangular_instance(Rng& rng, std::size_t m, std::size_t n) {
    const EntryStyle style{2, 1, 25, 30};
    BlockInstance out;
    out.a = random_index_one(rng, m, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m))), style);
    out.d = random_index_one(rng, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n))), style);
    out.b = Matrix(m, n);
    out.c = out.d * random_matrix(rng, n, m, style);
    return out;
}

// ---------------------------------------------------------------------------
// Named families (CLI `gen`) and per-theorem instance drawing (suites)
// ---------------------------------------------------------------------------

struct NamedMatrix {
    std::string name;
    Matrix value;
};

struct Generated {
    std::string family;
    std::vector<NamedMatrix> matrices;
    std::optional<Scalar> lambda;
};

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"ep",         "random",        "commuting-ep-pair",
                                                "triangular", "block-4x4",     "shared-block-ep-pair",
                                                "ep-triangular-pair", "idempotent-triangular", "lambda-pair",
                                                "block-triangular"};
    return names;
}

inline std::uint64_t family_stream(std::string_view family) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : family) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
    return h;
}

// Deterministic under (family, n, rank, seed). `rank` is only used by `ep`;
// when absent it is drawn from the seed.
inline Generated generate(const std::string& family, std::size_t n, std::optional<std::size_t> rank_opt,
                          std::uint64_t seed) {
    if (n == 0) throw DimensionMismatch("family size must be at least 1");
    Rng rng(seed, family_stream(family), n);
    Generated out{family, {}, std::nullopt};
    auto pair_out = [&](std::pair<Matrix, Matrix> ab, const char* first = "a", const char* second = "b") {
        out.matrices.push_back({first, std::move(ab.first)});
        out.matrices.push_back({second, std::move(ab.second)});
    };
    auto block_out = [&](BlockInstance bi) {
        out.matrices.push_back({"A", std::move(bi.a)});
        out.matrices.push_back({"B", std::move(bi.b)});
        out.matrices.push_back({"C", std::move(bi.c)});
        out.matrices.push_back({"D", std::move(bi.d)});
        out.lambda = bi.lambda;
    };
    if (family == "ep") {
        const std::size_t r = rank_opt ? *rank_opt : static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
        out.matrices.push_back({"a", ep_matrix(rng, n, r)});
    } else if (family == "random") {
        out.matrices.push_back({"a", random_square(rng, n)});
    } else if (family == "commuting-ep-pair") {
        pair_out(commuting_ep_pair(rng, n, rng.chance(1, 2) ? PairVariant::shifted : PairVariant::diagonal));
    } else if (family == "shared-block-ep-pair") {
        pair_out(shared_block_ep_pair(rng, n));
    } else if (family == "ep-triangular-pair") {
        pair_out(ep_triangular_pair(rng, n));
    } else if (family == "triangular") {
        pair_out(triangular_pair(rng, n, rng.chance(1, 2)), "p", "x");
    } else if (family == "idempotent-triangular") {
        pair_out(idempotent_triangular_pair(rng, n), "p", "a");
    } else if (family == "block-4x4") {
        block_out(rng.chance(1, 2) || n < 2 ? invertible_block_instance(rng, n) : singular_block_instance(rng, n, n));
    } else if (family == "lambda-pair") {
        BlockInstance bi = lambda_pair_instance(rng, n);
        out.matrices.push_back({"a", std::move(bi.a)});
        out.matrices.push_back({"b", std::move(bi.b)});
        out.lambda = bi.lambda;
    } else if (family == "block-triangular") {
        block_out(block_triangular_instance(rng, n, n));
    } else {
        throw Error("unknown family '" + family + "'");
    }
    return out;
}

// One instance of the theorem's domain whose hypotheses all pass, together
// with the checker's report. Resamples at most max_retries times.
struct Trial {
    lab::Instance instance;
    lab::TheoremReport report;
    int attempts = 0;
};

inline std::size_t draw_size(Rng& rng, std::size_t lo, std::size_t size_bound) {
    const std::size_t hi = std::max(lo, size_bound);
    return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

inline lab::Instance draw_instance(lab::TheoremId id, Rng& rng, std::size_t size_bound) {
    using lab::TheoremId;
    auto from_pair = [](std::pair<Matrix, Matrix> ab) {
        return lab::Instance{std::move(ab.first), std::move(ab.second), std::nullopt, std::nullopt, Scalar(1)};
    };
    auto from_block = [](BlockInstance bi) {
        return lab::Instance{std::move(bi.a), std::move(bi.b), std::move(bi.c), std::move(bi.d), bi.lambda};
    };
    switch (id) {
    case TheoremId::L2_1: return from_pair(idempotent_triangular_pair(rng, draw_size(rng, 1, size_bound)));
    case TheoremId::L2_2: return from_pair(triangular_pair(rng, draw_size(rng, 2, size_bound), false));
    case TheoremId::L2_3: return from_pair(triangular_pair(rng, draw_size(rng, 2, size_bound), true));
    case TheoremId::L2_4: return from_pair(ep_triangular_pair(rng, draw_size(rng, 1, size_bound)));
    case TheoremId::T3_1: {
        const std::size_t n = draw_size(rng, 1, size_bound);
        switch (rng.uniform(0, 2)) {
        case 0: return from_pair(shared_block_ep_pair(rng, n));
        case 1: return from_pair(commuting_ep_pair(rng, n, PairVariant::shifted));
        default: return from_pair(commuting_ep_pair(rng, n, PairVariant::diagonal));
        }
    }
    case TheoremId::C3_2: {
        const std::size_t n = draw_size(rng, 1, size_bound);
        if (rng.chance(1, 2)) return from_pair(overlapping_ep_pair(rng, n));
        return from_pair(commuting_ep_pair(rng, n, PairVariant::equal_on_overlap));
    }
    case TheoremId::C3_3: {
        const std::size_t n = draw_size(rng, 1, size_bound);
        return from_pair(
            commuting_ep_pair(rng, n, rng.chance(2, 3) ? PairVariant::shifted : PairVariant::diagonal));
    }
    case TheoremId::L4_1: {
        const std::size_t half = std::max<std::size_t>(1, size_bound / 2);
        return from_block(block_triangular_instance(rng, draw_size(rng, 1, half), draw_size(rng, 1, half)));
    }
    case TheoremId::L4_2: return from_block(lambda_pair_instance(rng, draw_size(rng, 1, size_bound)));
    case TheoremId::T4_3: {
        const std::size_t half = std::max<std::size_t>(1, size_bound / 2);
        if (rng.chance(1, 2)) return from_block(invertible_block_instance(rng, draw_size(rng, 1, half)));
        return from_block(singular_block_instance(rng, draw_size(rng, 1, half), draw_size(rng, 1, half)));
    }
    case TheoremId::C4_4: {
        const std::size_t half = std::max<std::size_t>(1, size_bound / 2);
        return from_block(invertible_block_instance(rng, draw_size(rng, 1, half)));
    }
    }
    throw Error("unknown theorem");
}

inline Trial draw_trial(lab::TheoremId id, std::uint64_t seed, std::uint64_t trial, std::size_t size_bound) {
    Rng rng(seed, static_cast<std::uint64_t>(id) + 1, trial);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        lab::Instance inst;
        try {
            inst = draw_instance(id, rng, size_bound);
        } catch (const GenerationExhausted&) {
            continue; // a building block ran out of draws; resample the whole instance
        }
        lab::TheoremReport rep = lab::check(id, inst);
        if (rep.verdict != lab::Verdict::HypothesisFailed) return {std::move(inst), std::move(rep), attempt};
    }
    throw GenerationExhausted(std::string(lab::to_string(id)) + ": no hypothesis-satisfying instance after " +
                              std::to_string(max_retries) + " draws (seed " + std::to_string(seed) + ", trial " +
                              std::to_string(trial) + ")");
}

} // namespace starcore::gen
