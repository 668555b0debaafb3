#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcore/matrix.hpp"

namespace starcore {

enum class InverseKind { group, drazin, moore_penrose, one_three, core };

inline std::string_view to_string(InverseKind k) {
    switch (k) {
    case InverseKind::group: return "group";
    case InverseKind::drazin: return "drazin";
    case InverseKind::moore_penrose: return "moore-penrose";
    case InverseKind::one_three: return "one-three";
    case InverseKind::core: return "core";
    }
    return "?";
}

// A computed inverse plus the defining equations that were checked against
// it. Every equation listed held exactly; a failed check throws instead.
struct GenInverse {
    InverseKind kind;
    Matrix inverse;
    std::size_t index = 1;
    std::vector<std::string> certificate;
};

struct SpectralData {
    Matrix a_pi;  // I - A A^D
    Matrix a_ad;  // A A^D
    std::size_t index = 1;
};

namespace detail {

inline void certify(std::vector<std::string>& cert, bool holds, const char* equation, InverseKind kind) {
    if (!holds)
        throw InternalError(std::string(to_string(kind)) + " inverse failed its certificate: " + equation);
    cert.emplace_back(equation);
}

// (GF)^-k with the ranks already known to be full.
inline Matrix inverse_power(const Matrix& core, std::size_t k) { return power(inverse(core), k); }

} // namespace detail

// Smallest k >= 0 with rank(A^k) = rank(A^(k+1)), reported as 1 when k = 0.
inline std::size_t drazin_index(const Matrix& a) {
    require_square(a, "drazin_index");
    std::size_t prev = a.rows();
    Matrix pw = Matrix::identity(a.rows());
    for (std::size_t k = 0; k <= a.rows(); ++k) {
        pw = pw * a;
        std::size_t r = rank(pw);
        if (r == prev) return k == 0 ? 1 : k;
        prev = r;
    }
    return a.rows(); // unreachable: ranks stabilise within n steps
}

// rank(A) == rank(A^2); over a field this is both group and core invertibility.
inline bool is_group_invertible(const Matrix& a) {
    require_square(a, "is_group_invertible");
    return rank(a) == rank(a * a);
}

inline bool is_core_invertible(const Matrix& a) { return is_group_invertible(a); }

inline GenInverse moore_penrose(const Matrix& a) {
    const auto frf = full_rank_factorize(a);
    Matrix x(a.cols(), a.rows());
    if (frf.rank > 0) {
        Matrix gs = frf.G.star();
        Matrix fs = frf.F.star();
        x = gs * inverse(frf.G * gs) * inverse(fs * frf.F) * fs;
    }
    GenInverse out{InverseKind::moore_penrose, x, 1, {}};
    Matrix ax = a * x;
    Matrix xa = x * a;
    detail::certify(out.certificate, ax * a == a, "AXA = A", out.kind);
    detail::certify(out.certificate, xa * x == x, "XAX = X", out.kind);
    detail::certify(out.certificate, ax.star() == ax, "(AX)* = AX", out.kind);
    detail::certify(out.certificate, xa.star() == xa, "(XA)* = XA", out.kind);
    return out;
}

// The canonical (1,3)-inverse is the Moore-Penrose inverse.
inline GenInverse one_three_inverse(const Matrix& a) {
    GenInverse out{InverseKind::one_three, moore_penrose(a).inverse, 1, {}};
    Matrix ax = a * out.inverse;
    detail::certify(out.certificate, ax * a == a, "AXA = A", out.kind);
    detail::certify(out.certificate, ax.star() == ax, "(AX)* = AX", out.kind);
    return out;
}

// A^# = F (GF)^-2 G from A = FG; GF is invertible iff rank(A^2) = rank(A).
inline GenInverse group_inverse(const Matrix& a) {
    require_square(a, "group_inverse");
    const auto frf = full_rank_factorize(a);
    Matrix x(a.rows(), a.cols());
    if (frf.rank > 0) {
        auto gf_inv = try_inverse(frf.G * frf.F);
        if (!gf_inv) throw NoGroupInverse();
        x = frf.F * (*gf_inv * *gf_inv) * frf.G;
    }
    GenInverse out{InverseKind::group, x, 1, {}};
    Matrix ax = a * x;
    detail::certify(out.certificate, x * a * a == a, "XA^2 = A", out.kind);
    detail::certify(out.certificate, ax * x == x, "AX^2 = X", out.kind);
    detail::certify(out.certificate, ax == x * a, "AX = XA", out.kind);
    return out;
}

// Cline's recursion: A = B1 C1, C1 B1 = B2 C2, ... until Ck Bk is invertible
// (A^D = B1..Bk (CkBk)^-(k+1) Ck..C1) or zero (A^D = 0). Each step shrinks the
// factor size, so depth never exceeds n.
inline GenInverse drazin_inverse(const Matrix& a) {
    require_square(a, "drazin_inverse");
    const std::size_t n = a.rows();
    std::vector<Matrix> lefts;
    std::vector<Matrix> rights;
    Matrix x(n, n);
    Matrix current = a;
    for (std::size_t depth = 0; depth <= n; ++depth) {
        auto frf = full_rank_factorize(current);
        if (frf.rank == 0) break; // nilpotent tail: A^D = 0
        lefts.push_back(frf.F);
        rights.push_back(frf.G);
        Matrix next = frf.G * frf.F;
        if (auto inv = try_inverse(next)) {
            Matrix middle = power(*inv, lefts.size() + 1);
            Matrix l = lefts.front();
            for (std::size_t k = 1; k < lefts.size(); ++k) l = l * lefts[k];
            Matrix r = rights.back();
            for (std::size_t k = rights.size() - 1; k-- > 0;) r = r * rights[k];
            x = l * middle * r;
            break;
        }
        current = std::move(next);
    }

    const std::size_t k = drazin_index(a);
    GenInverse out{InverseKind::drazin, x, k, {}};
    Matrix ak = power(a, k);
    Matrix ax = a * x;
    detail::certify(out.certificate, x * ak * a == ak, "XA^(k+1) = A^k", out.kind);
    detail::certify(out.certificate, ax * x == x, "AX^2 = X", out.kind);
    detail::certify(out.certificate, ax == x * a, "AX = XA", out.kind);
    return out;
}

// A^core = A^# A A^(1,3).
inline GenInverse core_inverse(const Matrix& a) {
    require_square(a, "core_inverse");
    Matrix g = group_inverse(a).inverse;
    Matrix x = g * a * one_three_inverse(a).inverse;
    GenInverse out{InverseKind::core, x, 1, {}};
    Matrix ax = a * x;
    detail::certify(out.certificate, x * a * a == a, "XA^2 = A", out.kind);
    detail::certify(out.certificate, ax * x == x, "AX^2 = X", out.kind);
    detail::certify(out.certificate, ax.star() == ax, "(AX)* = AX", out.kind);
    detail::certify(out.certificate, ax * a == a, "AXA = A", out.kind);
    detail::certify(out.certificate, x * ax == x, "XAX = X", out.kind);
    return out;
}

inline SpectralData spectral_idempotent(const Matrix& a) {
    GenInverse d = drazin_inverse(a);
    Matrix aad = a * d.inverse;
    return {complement(aad), aad, d.index};
}

// a^pi = 1 - a a^D
inline Matrix spectral_complement(const Matrix& a) { return spectral_idempotent(a).a_pi; }

// EP: index <= 1 and A A^dagger = A^dagger A. When true, the core and group
// inverses must coincide; a mismatch is an internal error.
inline bool is_ep(const Matrix& a) {
    require_square(a, "is_ep");
    if (!is_group_invertible(a)) return false;
    Matrix mp = moore_penrose(a).inverse;
    if (a * mp != mp * a) return false;
    if (core_inverse(a).inverse != group_inverse(a).inverse)
        throw InternalError("EP matrix whose core inverse differs from its group inverse");
    return true;
}

// p = I - A A^(1,3): a projection with pA = 0; A + p is invertible exactly
// when A is core invertible.
inline Matrix core_projection_witness(const Matrix& a) {
    require_square(a, "core_projection_witness");
    return complement(a * one_three_inverse(a).inverse);
}

inline bool core_invertible_by_projection(const Matrix& a) { return is_invertible(a + core_projection_witness(a)); }

// Some S with S (A* A) = A, i.e. A lies in the left ideal generated by A* A.
inline std::optional<Matrix> left_ideal_witness(const Matrix& a) { return solve_right(a.star() * a, a); }

// ---------------------------------------------------------------------------
// Triangular constructions relative to a projection p
// ---------------------------------------------------------------------------

// Corners of x = [[a, 0], [b, d]]_p (all full-size).
struct LowerTriangularParts {
    Matrix a; // p x p
    Matrix b; // (1-p) x p
    Matrix d; // (1-p) x (1-p)
};

inline LowerTriangularParts lower_triangular_parts(const Matrix& p, const Matrix& x) {
    PierceBlocks blocks = pierce_decompose(x, p);
    if (!blocks.pq.is_zero()) throw NotTriangular();
    return {std::move(blocks.pp), std::move(blocks.qp), std::move(blocks.qq)};
}

// z = (d^#)^2 b a^pi + d^pi b (a^#)^2 - d^# b a^#
inline Matrix triangular_group_correction(const Matrix& a_sharp, const Matrix& a_pi, const Matrix& d_sharp,
                                          const Matrix& d_pi, const Matrix& b) {
    return d_sharp * d_sharp * b * a_pi + d_pi * b * a_sharp * a_sharp - d_sharp * b * a_sharp;
}

namespace detail {

inline void require_projection(const Matrix& p, const Matrix& x) {
    require_square(x, "triangular construction");
    if (!p.is_square() || p.rows() != x.rows())
        throw DimensionMismatch("projection " + p.shape() + " does not match " + x.shape());
    if (!is_projection(p)) throw HypothesisFailed("p is a projection");
}

} // namespace detail

// Group inverse of x = [[a, 0], [b, d]]_p assembled from a^#, d^# and the
// correction term z. Requires a group invertible; x is group invertible iff
// d is and d^pi b a^pi = 0.
inline GenInverse group_inverse_triangular(const Matrix& p, const Matrix& x) {
    detail::require_projection(p, x);
    const auto parts = lower_triangular_parts(p, x);
    if (!is_group_invertible(parts.a)) throw HypothesisFailed("pxp is group invertible");

    auto reject = [&](const std::string& why) -> GenInverse {
        if (is_group_invertible(x))
            throw InternalError("triangular criterion rejected a group invertible matrix (" + why + ")");
        throw HypothesisFailed(why);
    };
    if (!is_group_invertible(parts.d)) return reject("(1-p)x(1-p) is group invertible");

    const std::size_t n = x.rows();
    const Matrix id = Matrix::identity(n);
    const Matrix a_sharp = group_inverse(parts.a).inverse;
    const Matrix d_sharp = group_inverse(parts.d).inverse;
    const Matrix a_pi = id - parts.a * a_sharp;
    const Matrix d_pi = id - parts.d * d_sharp;
    if (!(d_pi * parts.b * a_pi).is_zero()) return reject("d^pi b a^pi = 0");

    Matrix z = triangular_group_correction(a_sharp, a_pi, d_sharp, d_pi, parts.b);
    GenInverse out{InverseKind::group, a_sharp + z + d_sharp, 1, {}};
    Matrix ax = x * out.inverse;
    detail::certify(out.certificate, out.inverse * x * x == x, "XA^2 = A", out.kind);
    detail::certify(out.certificate, ax * out.inverse == out.inverse, "AX^2 = X", out.kind);
    detail::certify(out.certificate, ax == out.inverse * x, "AX = XA", out.kind);
    if (out.inverse != group_inverse(x).inverse)
        throw InternalError("triangular group inverse disagrees with the general group inverse");
    return out;
}

// Core inverse of a with p a (1-p) = 0, built from the core inverses of the
// diagonal corners:
//   x = (pap)^core + (ap^pi)^core - (ap^pi)^core (p^pi a p) (pap)^core
//   a^core = a^# a x
// with a^# taken from the triangular group-inverse construction.
inline GenInverse core_inverse_triangular(const Matrix& p, const Matrix& a) {
    detail::require_projection(p, a);
    const Matrix q = complement(p);
    if (!(p * a * q).is_zero()) throw NotTriangular();

    const Matrix pap = p * a * p;
    const Matrix aq = a * q;
    const Matrix qap = q * a * p;
    if (!is_core_invertible(pap)) throw HypothesisFailed("pap is core invertible");
    if (!is_core_invertible(aq)) throw HypothesisFailed("ap^pi is core invertible");
    if (!(spectral_complement(aq) * qap).is_zero()) throw HypothesisFailed("(ap^pi)^pi p^pi a p = 0");

    const Matrix pap_core = core_inverse(pap).inverse;
    const Matrix aq_core = core_inverse(aq).inverse;
    const Matrix x = pap_core + aq_core - aq_core * qap * pap_core;
    const Matrix a_sharp = group_inverse_triangular(p, a).inverse;

    GenInverse out{InverseKind::core, a_sharp * a * x, 1, {}};
    const Matrix& c = out.inverse;
    Matrix ac = a * c;
    detail::certify(out.certificate, c * a * a == a, "XA^2 = A", out.kind);
    detail::certify(out.certificate, ac * c == c, "AX^2 = X", out.kind);
    detail::certify(out.certificate, ac.star() == ac, "(AX)* = AX", out.kind);
    detail::certify(out.certificate, ac * a == a, "AXA = A", out.kind);
    detail::certify(out.certificate, c * ac == c, "XAX = X", out.kind);
    detail::certify(out.certificate, (p * c * q).is_zero(), "p X (1-p) = 0", out.kind);
    if (c != core_inverse(a).inverse)
        throw InternalError("triangular core inverse disagrees with the general core inverse");
    return out;
}

// Core inverse of a + b for EP a via the triangular construction with
// p = a a^#. Hypotheses are checked in order and the first failure is thrown.
inline GenInverse core_inverse_ep_sum(const Matrix& a, const Matrix& b) {
    require_square(a, "core_inverse_ep_sum");
    if (a.rows() != b.rows() || !b.is_square())
        throw DimensionMismatch("core_inverse_ep_sum: " + a.shape() + " vs " + b.shape());
    if (!is_ep(a)) throw HypothesisFailed("a is EP");
    if (!is_core_invertible(b)) throw HypothesisFailed("b is core invertible");

    const Matrix id = Matrix::identity(a.rows());
    const Matrix a_sharp = group_inverse(a).inverse;
    const Matrix p = a * a_sharp;
    const Matrix a_pi = id - p;
    if (!(a * b * a_pi).is_zero()) throw HypothesisFailed("a b a^pi = 0");
    if (!is_core_invertible(a * (id + a_sharp * b))) throw HypothesisFailed("a(1 + a^# b) is core invertible");
    if (!(spectral_complement(b) * a_pi * b).is_zero()) throw HypothesisFailed("b^pi a^pi b = 0");

    const Matrix sum = a + b;
    GenInverse out = core_inverse_triangular(p, sum);
    detail::certify(out.certificate, (a * out.inverse * a_pi).is_zero(), "a X a^pi = 0", out.kind);
    return out;
}

} // namespace starcore
