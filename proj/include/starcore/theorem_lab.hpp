#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcore/geninv.hpp"

namespace starcore::lab {

enum class TheoremId { L2_1, L2_2, L2_3, L2_4, T3_1, C3_2, C3_3, L4_1, L4_2, T4_3, C4_4 };

inline constexpr std::array<TheoremId, 11> all_theorems{
    TheoremId::L2_1, TheoremId::L2_2, TheoremId::L2_3, TheoremId::L2_4, TheoremId::T3_1, TheoremId::C3_2,
    TheoremId::C3_3, TheoremId::L4_1, TheoremId::L4_2, TheoremId::T4_3, TheoremId::C4_4};

inline std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::L2_1: return "L2.1";
    case TheoremId::L2_2: return "L2.2";
    case TheoremId::L2_3: return "L2.3";
    case TheoremId::L2_4: return "L2.4";
    case TheoremId::T3_1: return "T3.1";
    case TheoremId::C3_2: return "C3.2";
    case TheoremId::C3_3: return "C3.3";
    case TheoremId::L4_1: return "L4.1";
    case TheoremId::L4_2: return "L4.2";
    case TheoremId::T4_3: return "T4.3";
    case TheoremId::C4_4: return "C4.4";
    }
    return "?";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    for (TheoremId id : all_theorems)
        if (to_string(id) == s) return id;
    return std::nullopt;
}

// Results stated as "(1) <=> (2)". The rest are one-directional and report
// their conclusion as side2.
inline bool is_two_sided(TheoremId id) {
    return id == TheoremId::L2_2 || id == TheoremId::L2_4 || id == TheoremId::T3_1 || id == TheoremId::C3_3;
}

enum class Verdict { EquivalenceHolds, HypothesisFailed, Violation };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::EquivalenceHolds: return "EquivalenceHolds";
    case Verdict::HypothesisFailed: return "HypothesisFailed";
    case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

struct Conjunct {
    std::string name;
    bool holds = false;
    // Hypotheses that are not part of the statement (or are automatic over
    // matrices) do not gate the verdict.
    bool gating = true;
    std::string note;
};

struct TheoremReport {
    TheoremId theorem{};
    std::vector<Conjunct> hypotheses;
    std::vector<Conjunct> side1;
    std::vector<Conjunct> side2;
    // Exact identities and oracle cross-checks evaluated once hypotheses hold.
    std::vector<Conjunct> checks;
    Verdict verdict = Verdict::HypothesisFailed;
    std::string detail;

    std::optional<std::string> first_failed_hypothesis() const {
        for (const auto& h : hypotheses)
            if (h.gating && !h.holds) return h.name;
        return std::nullopt;
    }
    static bool all_hold(const std::vector<Conjunct>& cs) {
        for (const auto& c : cs)
            if (!c.holds) return false;
        return true;
    }
    bool side1_holds() const { return all_hold(side1); }
    bool side2_holds() const { return all_hold(side2); }
};

namespace detail {

inline constexpr const char* vacuous_drazin =
    "vacuous: every square matrix over a field has a Drazin inverse";

// Accumulates a report. Hypotheses are evaluated lazily in order; after the
// first gating failure nothing further is evaluated.
class ReportBuilder {
public:
    explicit ReportBuilder(TheoremId id) { report_.theorem = id; }

    bool ok() const noexcept { return ok_; }
    bool side1_holds() const { return TheoremReport::all_hold(report_.side1); }
    bool side2_holds() const { return TheoremReport::all_hold(report_.side2); }

    ReportBuilder& hyp(std::string name, const std::function<bool()>& test) {
        if (!ok_) return *this;
        bool holds = test();
        report_.hypotheses.push_back({std::move(name), holds, true, {}});
        if (!holds) ok_ = false;
        return *this;
    }
    ReportBuilder& vacuous(std::string name, std::string note = vacuous_drazin) {
        if (!ok_) return *this;
        report_.hypotheses.push_back({std::move(name), true, false, std::move(note)});
        return *this;
    }
    ReportBuilder& info(std::string name, bool holds, std::string note) {
        if (!ok_) return *this;
        report_.hypotheses.push_back({std::move(name), holds, false, std::move(note)});
        return *this;
    }

    // Conjuncts of one side; once a conjunct fails, later ones that depend
    // on it are recorded as failed without being evaluated.
    void side(std::vector<Conjunct>& out, std::string name, const std::function<bool()>& test,
              bool depends_on_previous = false) {
        if (depends_on_previous && !out.empty() && !out.back().holds) {
            out.push_back({std::move(name), false, true, "not evaluated: previous conjunct failed"});
            return;
        }
        out.push_back({std::move(name), test(), true, {}});
    }
    void side1(std::string name, const std::function<bool()>& test, bool dep = false) {
        side(report_.side1, std::move(name), test, dep);
    }
    void side2(std::string name, const std::function<bool()>& test, bool dep = false) {
        side(report_.side2, std::move(name), test, dep);
    }
    void check(std::string name, bool holds, std::string note = {}) {
        report_.checks.push_back({std::move(name), holds, true, std::move(note)});
    }

    TheoremReport finish() {
        auto& r = report_;
        if (!ok_) {
            r.verdict = Verdict::HypothesisFailed;
            r.detail = "first failed hypothesis: " + *r.first_failed_hypothesis();
            return std::move(r);
        }
        for (const auto& c : r.checks) {
            if (!c.holds) {
                r.verdict = Verdict::Violation;
                r.detail = "check failed: " + c.name;
                return std::move(r);
            }
        }
        const bool s1 = r.side1_holds();
        const bool s2 = r.side2_holds();
        if (is_two_sided(r.theorem)) {
            if (s1 == s2) {
                r.verdict = Verdict::EquivalenceHolds;
                r.detail = s1 ? "both sides hold" : "both sides fail";
            } else {
                r.verdict = Verdict::Violation;
                const auto& failing = s1 ? r.side2 : r.side1;
                std::string where;
                for (const auto& c : failing)
                    if (!c.holds) {
                        where = c.name;
                        break;
                    }
                r.detail = std::string(s1 ? "side (1) holds but side (2) fails at '"
                                          : "side (2) holds but side (1) fails at '") +
                           where + "'";
            }
        } else if (s2) {
            r.verdict = Verdict::EquivalenceHolds;
            r.detail = "conclusion holds";
        } else {
            r.verdict = Verdict::Violation;
            for (const auto& c : r.side2)
                if (!c.holds) {
                    r.detail = "hypotheses hold but conclusion fails at '" + c.name + "'";
                    break;
                }
        }
        return std::move(r);
    }

private:
    TheoremReport report_;
    bool ok_ = true;
};

inline void require_same_square(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch(std::string(what) + ": expected square matrices of equal size, got " + a.shape() +
                                " and " + b.shape());
}

inline Matrix sharp(const Matrix& a) { return group_inverse(a).inverse; }
inline Matrix core(const Matrix& a) { return core_inverse(a).inverse; }
inline Matrix pi(const Matrix& a) { return spectral_complement(a); }

} // namespace detail

// (ap^pi)(ap^pi)^# = (aa^#) p^pi for idempotent p, group invertible a with
// pap^pi = 0 and ap^pi group invertible.
inline TheoremReport check_lemma_2_1(const Matrix& p, const Matrix& a) {
    detail::require_same_square(p, a, "L2.1");
    detail::ReportBuilder rb(TheoremId::L2_1);
    const Matrix q = complement(p);
    rb.hyp("p is idempotent", [&] { return is_idempotent(p); })
        .hyp("a is group invertible", [&] { return is_group_invertible(a); })
        .hyp("p a p^pi = 0", [&] { return (p * a * q).is_zero(); })
        .hyp("a p^pi is group invertible", [&] { return is_group_invertible(a * q); });
    if (rb.ok()) {
        const Matrix aq = a * q;
        rb.side2("(ap^pi)(ap^pi)^# = (aa^#)p^pi", [&] { return aq * detail::sharp(aq) == a * detail::sharp(a) * q; });
    }
    return rb.finish();
}

// x = [[a, 0], [b, d]]_p with a group invertible:
//   x group invertible  <=>  d group invertible and d^pi b a^pi = 0,
// and then the assembled formula equals the general group inverse.
inline TheoremReport check_lemma_2_2(const Matrix& p, const Matrix& x) {
    detail::require_same_square(p, x, "L2.2");
    detail::ReportBuilder rb(TheoremId::L2_2);
    const Matrix q = complement(p);
    rb.hyp("p is a projection", [&] { return is_projection(p); })
        .hyp("p x p^pi = 0", [&] { return (p * x * q).is_zero(); })
        .hyp("a = pxp is group invertible", [&] { return is_group_invertible(p * x * p); });
    if (rb.ok()) {
        const Matrix a = p * x * p;
        const Matrix b = q * x * p;
        const Matrix d = q * x * q;
        const Matrix id = Matrix::identity(x.rows());
        rb.side1("x is group invertible", [&] { return is_group_invertible(x); });
        rb.side2("d is group invertible", [&] { return is_group_invertible(d); });
        rb.side2(
            "d^pi b a^pi = 0",
            [&] { return ((id - d * detail::sharp(d)) * b * (id - a * detail::sharp(a))).is_zero(); }, true);
        if (rb.side1_holds() && rb.side2_holds()) {
            try {
                const Matrix formula = group_inverse_triangular(p, x).inverse;
                rb.check("triangular formula equals general group inverse", formula == detail::sharp(x));
            } catch (const Error& e) {
                rb.check("triangular formula equals general group inverse", false, e.what());
            }
        }
    }
    return rb.finish();
}

// p a p^pi = 0, pap and ap^pi core invertible, (ap^pi)^pi p^pi a p = 0
//   => a core invertible and p a^core p^pi = 0.
inline TheoremReport check_lemma_2_3(const Matrix& p, const Matrix& a) {
    detail::require_same_square(p, a, "L2.3");
    detail::ReportBuilder rb(TheoremId::L2_3);
    const Matrix q = complement(p);
    rb.hyp("p is a projection", [&] { return is_projection(p); })
        .hyp("p a p^pi = 0", [&] { return (p * a * q).is_zero(); })
        .hyp("pap is core invertible", [&] { return is_core_invertible(p * a * p); })
        .hyp("ap^pi is core invertible", [&] { return is_core_invertible(a * q); })
        .hyp("(ap^pi)^pi p^pi a p = 0", [&] { return (detail::pi(a * q) * q * a * p).is_zero(); });
    if (rb.ok()) {
        rb.side2("a is core invertible", [&] { return is_core_invertible(a); });
        rb.side2("p a^core p^pi = 0", [&] { return (p * detail::core(a) * q).is_zero(); }, true);
        if (rb.side2_holds()) {
            try {
                const Matrix built = core_inverse_triangular(p, a).inverse;
                rb.check("constructed core inverse equals general core inverse", built == detail::core(a));
            } catch (const Error& e) {
                rb.check("constructed core inverse equals general core inverse", false, e.what());
            }
        }
    }
    return rb.finish();
}

// a EP, b core invertible, a b a^pi = 0:
//   (1) a+b core invertible and a (a+b)^core a^pi = 0
//   (2) a(1 + a^# b) core invertible and b^pi a^pi b = 0
inline TheoremReport check_lemma_2_4(const Matrix& a, const Matrix& b) {
    detail::require_same_square(a, b, "L2.4");
    detail::ReportBuilder rb(TheoremId::L2_4);
    rb.hyp("a is EP", [&] { return is_ep(a); })
        .hyp("b is core invertible", [&] { return is_core_invertible(b); })
        .vacuous("a^pi b has a Drazin inverse")
        .hyp("a b a^pi = 0", [&] { return (a * b * detail::pi(a)).is_zero(); });
    if (rb.ok()) {
        const Matrix id = Matrix::identity(a.rows());
        const Matrix sum = a + b;
        const Matrix a_pi = detail::pi(a);
        rb.side1("a+b is core invertible", [&] { return is_core_invertible(sum); });
        rb.side1("a (a+b)^core a^pi = 0", [&] { return (a * detail::core(sum) * a_pi).is_zero(); }, true);
        rb.side2("a(1 + a^# b) is core invertible",
                 [&] { return is_core_invertible(a * (id + detail::sharp(a) * b)); });
        rb.side2("b^pi a^pi b = 0", [&] { return (detail::pi(b) * a_pi * b).is_zero(); });
        if (rb.side1_holds() && rb.side2_holds()) {
            try {
                const Matrix built = core_inverse_ep_sum(a, b).inverse;
                rb.check("triangular construction of (a+b)^core equals general core inverse",
                         built == detail::core(sum));
            } catch (const Error& e) {
                rb.check("triangular construction of (a+b)^core equals general core inverse", false, e.what());
            }
        }
    }
    return rb.finish();
}

// a, b EP with a b a^pi = b a b^pi = 0:
//   (1) a+b core invertible, a (a+b)^core a^pi = b (a+b)^core b^pi = 0
//   (2) a a^# b + b b^# a core invertible, a^pi b^pi a = b^pi a^pi b = 0
inline TheoremReport check_theorem_3_1(const Matrix& a, const Matrix& b) {
    detail::require_same_square(a, b, "T3.1");
    detail::ReportBuilder rb(TheoremId::T3_1);
    rb.hyp("a is EP", [&] { return is_ep(a); })
        .hyp("b is EP", [&] { return is_ep(b); })
        .vacuous("a^pi b has a Drazin inverse")
        .vacuous("b^pi a has a Drazin inverse")
        .hyp("a b a^pi = 0", [&] { return (a * b * detail::pi(a)).is_zero(); })
        .hyp("b a b^pi = 0", [&] { return (b * a * detail::pi(b)).is_zero(); });
    if (rb.ok()) {
        const Matrix sum = a + b;
        const Matrix a_pi = detail::pi(a);
        const Matrix b_pi = detail::pi(b);
        std::optional<Matrix> sum_core;
        rb.side1("a+b is core invertible", [&] { return is_core_invertible(sum); });
        if (rb.side1_holds()) sum_core = detail::core(sum);
        rb.side1("a (a+b)^core a^pi = 0", [&] { return (a * *sum_core * a_pi).is_zero(); }, true);
        rb.side1("b (a+b)^core b^pi = 0", [&] { return sum_core && (b * *sum_core * b_pi).is_zero(); });
        rb.side2("a a^# b + b b^# a is core invertible",
                 [&] { return is_core_invertible(a * detail::sharp(a) * b + b * detail::sharp(b) * a); });
        rb.side2("a^pi b^pi a = 0", [&] { return (a_pi * b_pi * a).is_zero(); });
        rb.side2("b^pi a^pi b = 0", [&] { return (b_pi * a_pi * b).is_zero(); });
    }
    return rb.finish();
}

// a, b EP, a a^# b = b b^# a core invertible, 1/2 exists  =>  a+b core invertible.
inline TheoremReport check_corollary_3_2(const Matrix& a, const Matrix& b) {
    detail::require_same_square(a, b, "C3.2");
    detail::ReportBuilder rb(TheoremId::C3_2);
    rb.hyp("a is EP", [&] { return is_ep(a); })
        .hyp("b is EP", [&] { return is_ep(b); })
        .vacuous("a^pi b has a Drazin inverse")
        .vacuous("b^pi a has a Drazin inverse")
        .vacuous("1/2 exists", "vacuous: the scalar field has characteristic 0")
        .hyp("a a^# b = b b^# a", [&] { return a * detail::sharp(a) * b == b * detail::sharp(b) * a; })
        .hyp("a a^# b is core invertible", [&] { return is_core_invertible(a * detail::sharp(a) * b); });
    if (rb.ok()) rb.side2("a+b is core invertible", [&] { return is_core_invertible(a + b); });
    return rb.finish();
}

// a, b EP, ab = ba, a* b = b a*:
//   a+b core invertible  <=>  a a^# b + b b^# a core invertible
inline TheoremReport check_corollary_3_3(const Matrix& a, const Matrix& b) {
    detail::require_same_square(a, b, "C3.3");
    detail::ReportBuilder rb(TheoremId::C3_3);
    rb.hyp("a is EP", [&] { return is_ep(a); })
        .hyp("b is EP", [&] { return is_ep(b); })
        .hyp("ab = ba", [&] { return a * b == b * a; })
        .hyp("a* b = b a*", [&] { return a.star() * b == b * a.star(); });
    if (rb.ok()) {
        rb.side1("a+b is core invertible", [&] { return is_core_invertible(a + b); });
        rb.side2("a a^# b + b b^# a is core invertible",
                 [&] { return is_core_invertible(a * detail::sharp(a) * b + b * detail::sharp(b) * a); });
    }
    return rb.finish();
}

namespace detail {

inline void require_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, const char* what) {
    const bool ok = a.is_square() && d.is_square() && b.rows() == a.rows() && b.cols() == d.rows() &&
                    c.rows() == d.rows() && c.cols() == a.rows();
    if (!ok)
        throw DimensionMismatch(std::string(what) + ": need A m x m, B m x n, C n x m, D n x n; got " + a.shape() +
                                ", " + b.shape() + ", " + c.shape() + ", " + d.shape());
}

inline Matrix top_left_projection(std::size_t m, std::size_t n) {
    return block_diagonal(Matrix::identity(m), Matrix(n, n));
}

} // namespace detail

// A, D core invertible, D^pi C = 0  =>  [[A, 0], [C, D]] core invertible.
// The B block is not part of the statement and is ignored when given.
inline TheoremReport check_lemma_4_1(const Matrix& a, const std::optional<Matrix>& /*b_unused*/, const Matrix& c,
                                     const Matrix& d) {
    detail::require_blocks(a, Matrix(a.rows(), d.rows()), c, d, "L4.1");
    detail::ReportBuilder rb(TheoremId::L4_1);
    rb.hyp("A is core invertible", [&] { return is_core_invertible(a); })
        .hyp("D is core invertible", [&] { return is_core_invertible(d); })
        .hyp("D^pi C = 0", [&] { return (detail::pi(d) * c).is_zero(); });
    if (rb.ok()) {
        const Matrix n = assemble(a, Matrix(a.rows(), d.cols()), c, d);
        rb.side2("[[A, 0], [C, D]] is core invertible", [&] { return is_core_invertible(n); });
        if (rb.side2_holds()) {
            try {
                const Matrix p = detail::top_left_projection(a.rows(), d.rows());
                rb.check("triangular construction equals general core inverse",
                         core_inverse_triangular(p, n).inverse == detail::core(n));
            } catch (const Error& e) {
                rb.check("triangular construction equals general core inverse", false, e.what());
            }
        }
    }
    return rb.finish();
}

// A, B EP, AB = lambda BA (lambda != 0), AA^#B + BB^#A core invertible
//   =>  A+B core invertible.
inline TheoremReport check_lemma_4_2(const Matrix& a, const Matrix& b, const Scalar& lambda) {
    detail::require_same_square(a, b, "L4.2");
    if (lambda.is_zero()) throw ZeroLambda();
    detail::ReportBuilder rb(TheoremId::L4_2);
    rb.hyp("A is EP", [&] { return is_ep(a); })
        .hyp("B is EP", [&] { return is_ep(b); })
        .hyp("AB = lambda BA", [&] { return a * b == lambda * (b * a); })
        .vacuous("A^pi B has a Drazin inverse")
        .vacuous("B^pi A has a Drazin inverse")
        .hyp("AA^#B + BB^#A is core invertible",
             [&] { return is_core_invertible(a * detail::sharp(a) * b + b * detail::sharp(b) * a); });
    if (rb.ok()) {
        const Matrix a_pi = detail::pi(a);
        const Matrix b_pi = detail::pi(b);
        rb.check("A B A^pi = 0", (a * b * a_pi).is_zero());
        rb.check("B A B^pi = 0", (b * a * b_pi).is_zero());
        rb.check("A^pi B^pi A = 0", (a_pi * b_pi * a).is_zero());
        rb.check("B^pi A^pi B = 0", (b_pi * a_pi * b).is_zero());
        rb.side2("A+B is core invertible", [&] { return is_core_invertible(a + b); });
    }
    return rb.finish();
}

namespace detail {

inline void check_block_identities(ReportBuilder& rb, const Matrix& a, const Matrix& b, const Matrix& c,
                                   const Matrix& d, const Scalar& lambda, bool cb_is_ep) {
    const std::size_t m = a.rows();
    const std::size_t n = d.rows();
    const Matrix q = assemble(Matrix(m, m), b, c, Matrix(n, n));
    const Matrix p = block_diagonal(a, d);
    const Matrix q_drazin = drazin_inverse(q).inverse;
    rb.check("Q^D = Q (Q^2)^D", q_drazin == q * drazin_inverse(q * q).inverse);
    rb.check("Q Q^pi = 0", (q * complement(q * q_drazin)).is_zero());
    if (cb_is_ep) {
        bool ok = is_group_invertible(q);
        if (ok) {
            const Matrix qq = q * sharp(q);
            ok = qq.star() == qq;
        }
        rb.check("(Q Q^#)* = Q Q^#", ok);
    }
    rb.check("PQ = lambda QP", p * q == lambda * (q * p));

    // The reduction M = P + Q runs through S = PP^# Q + QQ^# P. Under the
    // hypotheses S = [[A, AA^# B], [DD^# C, D]]; the AA^# B corner is
    // generally nonzero, so S need not be block triangular.
    if (!is_group_invertible(q)) return;
    const Matrix s = p * sharp(p) * q + q * sharp(q) * p;
    const Matrix expected = assemble(a, a * sharp(a) * b, d * sharp(d) * c, d);
    rb.check("PP^# Q + QQ^# P = [[A, AA^# B], [DD^# C, D]]", s == expected);
    const bool s_core = is_core_invertible(s);
    rb.info("PP^# Q + QQ^# P is core invertible", s_core, "sufficient for the conclusion");
    rb.info("AA^# B = 0", (a * sharp(a) * b).is_zero(), "makes PP^# Q + QQ^# P block lower triangular");
    if (s_core)
        rb.check("PP^# Q + QQ^# P core invertible => M core invertible", is_core_invertible(p + q));
}

} // namespace detail

// A, D, BC EP; (BC)^pi A = 0, C (BC)^pi = 0, (CB)^pi D = 0, B (CB)^pi = 0,
// AB = lambda BD, DC = lambda CA  =>  M = [[A, B], [C, D]] core invertible.
inline TheoremReport check_theorem_4_3(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                                       const Scalar& lambda) {
    detail::require_blocks(a, b, c, d, "T4.3");
    if (lambda.is_zero()) throw ZeroLambda();
    detail::ReportBuilder rb(TheoremId::T4_3);
    const Matrix bc = b * c;
    const Matrix cb = c * b;
    rb.hyp("A is EP", [&] { return is_ep(a); })
        .hyp("D is EP", [&] { return is_ep(d); })
        .hyp("BC is EP", [&] { return is_ep(bc); });
    const bool cb_ep = rb.ok() && is_ep(cb);
    rb.info("CB is EP", cb_ep, "not among the stated hypotheses; needed for (Q Q^#)* = Q Q^#");
    rb.hyp("(BC)^pi A = 0", [&] { return (detail::pi(bc) * a).is_zero(); })
        .hyp("C (BC)^pi = 0", [&] { return (c * detail::pi(bc)).is_zero(); })
        .hyp("(CB)^pi D = 0", [&] { return (detail::pi(cb) * d).is_zero(); })
        .hyp("B (CB)^pi = 0", [&] { return (b * detail::pi(cb)).is_zero(); })
        .hyp("AB = lambda BD", [&] { return a * b == lambda * (b * d); })
        .hyp("DC = lambda CA", [&] { return d * c == lambda * (c * a); });
    if (rb.ok()) {
        detail::check_block_identities(rb, a, b, c, d, lambda, cb_ep);
        rb.side2("M = [[A, B], [C, D]] is core invertible", [&] { return is_core_invertible(assemble(a, b, c, d)); });
    }
    return rb.finish();
}

// A, D EP, BC invertible, AB = lambda BD, DC = lambda CA  =>  M core invertible.
inline TheoremReport check_corollary_4_4(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                                         const Scalar& lambda) {
    detail::require_blocks(a, b, c, d, "C4.4");
    if (lambda.is_zero()) throw ZeroLambda();
    detail::ReportBuilder rb(TheoremId::C4_4);
    rb.hyp("A is EP", [&] { return is_ep(a); })
        .hyp("D is EP", [&] { return is_ep(d); })
        .hyp("BC is invertible", [&] { return is_invertible(b * c); })
        .hyp("AB = lambda BD", [&] { return a * b == lambda * (b * d); })
        .hyp("DC = lambda CA", [&] { return d * c == lambda * (c * a); });
    if (rb.ok()) {
        const bool cb_inv = is_invertible(c * b);
        rb.info("CB is invertible", cb_inv, "follows from BC invertible only when B and C are square");
        if (cb_inv) detail::check_block_identities(rb, a, b, c, d, lambda, true);
        rb.side2("M = [[A, B], [C, D]] is core invertible", [&] { return is_core_invertible(assemble(a, b, c, d)); });
    }
    return rb.finish();
}

// Bundle of the matrices a checker consumes. Lemma 2.1-2.3 take (p, x) as
// (a, b); block results take A, B, C, D.
struct Instance {
    Matrix a;
    Matrix b;
    std::optional<Matrix> c;
    std::optional<Matrix> d;
    Scalar lambda{1};
};

inline TheoremReport check(TheoremId id, const Instance& in) {
    auto need = [&](const std::optional<Matrix>& m, const char* name) -> const Matrix& {
        if (!m) throw DimensionMismatch(std::string(to_string(id)) + " requires matrix " + name);
        return *m;
    };
    switch (id) {
    case TheoremId::L2_1: return check_lemma_2_1(in.a, in.b);
    case TheoremId::L2_2: return check_lemma_2_2(in.a, in.b);
    case TheoremId::L2_3: return check_lemma_2_3(in.a, in.b);
    case TheoremId::L2_4: return check_lemma_2_4(in.a, in.b);
    case TheoremId::T3_1: return check_theorem_3_1(in.a, in.b);
    case TheoremId::C3_2: return check_corollary_3_2(in.a, in.b);
    case TheoremId::C3_3: return check_corollary_3_3(in.a, in.b);
    case TheoremId::L4_1: return check_lemma_4_1(in.a, in.b, need(in.c, "C"), need(in.d, "D"));
    case TheoremId::L4_2: return check_lemma_4_2(in.a, in.b, in.lambda);
    case TheoremId::T4_3: return check_theorem_4_3(in.a, in.b, need(in.c, "C"), need(in.d, "D"), in.lambda);
    case TheoremId::C4_4: return check_corollary_4_4(in.a, in.b, need(in.c, "C"), need(in.d, "D"), in.lambda);
    }
    throw Error("unknown theorem");
}

} // namespace starcore::lab
