#pragma once

// Executable forms of the intermediate objects behind the Walsh spectrum of
// f_alpha: the (y, z) double sum, the T-set, the x -> z_x parametrization of
// the unit circle, the permutation P of the trace-one set, the sums T_delta on
// the trace-zero space and the integer-scaled shell word U_delta.
//
// Everything is kept at exact integer scale. The normalized shell word of the
// literature is q^{-1/2} U_delta, and its Hadamard value at c is recovered from
// shell_hadamard() by the factor 1 / (2 sqrt q).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "check.hpp"
#include "error.hpp"
#include "field.hpp"
#include "io.hpp"

namespace permwalsh {

inline int chi(const FieldCtx& ctx, Elem a) noexcept { return ctx.tr(a) ? -1 : 1; }

/// beta = b (c + theta) for beta outside GF(q); kappa = alpha b^{-3}.
struct BetaFrame {
    Elem2 beta;
    Elem b;
    Elem c;
    Elem kappa;
};

/// Point x of GF(q) together with its image on the unit circle.
struct ParamPoint {
    Elem x;
    Elem A;    // x^2 + x + lambda
    Elem2 z;   // (x + theta) / sqrt(A + 1)
    Elem t;    // z + 1/z
    Elem s;    // z^3 + z^-3
    Elem phi;  // A + A^-1 + A^-2
};

/// H0 = {u : Tr(u) = 0} and the isomorphism L(v + F2) = v^(q/2) + v from
/// GF(q)/F2 onto it. Cosets v + F2 are represented by their even member.
class TraceZeroSpace {
public:
    explicit TraceZeroSpace(const FieldCtx& ctx) : ctx_(&ctx), index_(ctx.q(), -1), l_inverse_(ctx.q(), 0) {
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            if (ctx.tr(Elem{a}) == 0) {
                index_[a] = static_cast<int>(h0_.size());
                h0_.push_back(Elem{a});
            }
        }
        for (std::uint32_t v = 0; v < ctx.q(); v += 2) {
            reps_.push_back(Elem{v});
            l_inverse_[L(Elem{v}).bits] = v;
        }
    }

    const std::vector<Elem>& h0() const noexcept { return h0_; }
    const std::vector<Elem>& coset_reps() const noexcept { return reps_; }

    bool contains(Elem u) const noexcept { return index_[u.bits] >= 0; }
    /// Position of u in h0(), or -1.
    int index_of(Elem u) const noexcept { return index_[u.bits]; }

    Elem L(Elem v) const noexcept { return ctx_->sqrt(v) + v; }
    /// Canonical (even) representative of L^{-1}(u); u must lie in H0.
    Elem L_inverse(Elem u) const noexcept { return Elem{l_inverse_[u.bits]}; }

    static Elem canonical(Elem v) noexcept { return Elem{v.bits & ~1U}; }

private:
    const FieldCtx* ctx_;
    std::vector<Elem> h0_;
    std::vector<Elem> reps_;
    std::vector<int> index_;
    std::vector<std::uint32_t> l_inverse_;
};

enum class Branch { Cube, Noncube };

inline const char* to_string(Branch b) noexcept { return b == Branch::Cube ? "cube" : "noncube"; }

/// U_delta(u) = (T_delta(u) - q [u = 0]) / 2 on H0, aligned with TraceZeroSpace::h0().
struct ShellWord {
    Elem delta;
    Branch branch = Branch::Noncube;
    std::vector<std::int64_t> values;

    bool is_zero() const noexcept {
        return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
    }
};

class ReductionLab {
public:
    explicit ReductionLab(const FieldCtx& ctx)
        : ctx_(&ctx), space_(ctx), mu_(ctx.mu_elements()), phi_(ctx.q()), p_(ctx.q()) {
        for (std::uint32_t x = 0; x < ctx.q(); ++x) phi_[x] = compute_phi(Elem{x});
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            if (ctx.tr(Elem{a}) == 1) {
                trace_one_.push_back(Elem{a});
                p_[a] = P(Elem{a});
            }
        }
    }

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    const TraceZeroSpace& space() const noexcept { return space_; }
    const std::vector<Elem2>& mu() const noexcept { return mu_; }
    /// The trace-one set {A : Tr(A) = 1}.
    const std::vector<Elem>& trace_one() const noexcept { return trace_one_; }

    // -- the (y, z) double sum -------------------------------------------------

    /// alpha (z^9 + z^-9).
    Elem P_alpha(Elem alpha, Elem2 z) const {
        if (!ctx_->in_mu(z)) throw NotInMu();
        const Elem2 z9 = ctx_->pow_u(z, 9);
        return to_base(ctx_->mul(alpha, z9 + ctx_->inv(z9)));
    }

    /// beta z^3 + conj(beta) z^-3 + (beta + conj(beta)) (z + z^-1).
    Elem Q_beta(Elem2 beta, Elem2 z) const {
        if (!ctx_->in_mu(z)) throw NotInMu();
        const Elem2 z3 = ctx_->pow_u(z, 3);
        return Q_beta(beta, z + ctx_->inv(z), z3, ctx_->inv(z3));
    }

    /// Q_beta from precomputed z + z^-1, z^3 and z^-3.
    Elem Q_beta(Elem2 beta, Elem2 z_plus_inv, Elem2 z3, Elem2 z3_inv) const {
        const Elem2 bar = FieldCtx::conj(beta);
        return to_base(ctx_->mul(beta, z3) + ctx_->mul(bar, z3_inv) + ctx_->mul(beta + bar, z_plus_inv));
    }

    /// sum over (y, z) in GF(q) x mu_{q+1} of chi(P_alpha(z) y^3 + Q_beta(z) y), minus q.
    std::int64_t basic_reduction_sum(Elem alpha, Elem2 beta) const {
        std::int64_t total = 0;
        for (const Elem2& z : mu_) {
            const Elem p = P_alpha(alpha, z);
            const Elem qb = Q_beta(beta, z);
            for (std::uint32_t yb = 0; yb < ctx_->q(); ++yb) {
                const Elem y{yb};
                total += chi(*ctx_, ctx_->mul(p, ctx_->mul(ctx_->sqr(y), y)) + ctx_->mul(qb, y));
            }
        }
        return total - ctx_->q();
    }

    BetaFrame beta_frame(Elem alpha, Elem2 beta) const {
        if (FieldCtx::in_base(beta)) throw Error("beta_frame needs beta outside GF(q)");
        const Elem b = beta.a1;  // beta + beta^q
        const Elem c = ctx_->div(beta.a0, b);
        return BetaFrame{beta, b, c, ctx_->mul(alpha, ctx_->pow(b, -3))};
    }

    // -- the T-set ---------------------------------------------------------------

    /// {z + 1/z : z in mu_{q+1}, z != 1}, sorted.
    std::vector<Elem> t_set_image() const {
        std::set<Elem> out;
        for (const Elem2& z : mu_)
            if (z != FieldCtx::one2()) out.insert(to_base(z + ctx_->inv(z)));
        return {out.begin(), out.end()};
    }

    /// {t != 0 : Tr(1/t) = 1}, sorted.
    std::vector<Elem> t_set_trace() const {
        std::vector<Elem> out;
        for (std::uint32_t t = 1; t < ctx_->q(); ++t)
            if (ctx_->tr(ctx_->inv(Elem{t})) == 1) out.push_back(Elem{t});
        return out;
    }

    std::vector<Elem> t_set() const { return t_set_image(); }

    // -- parametrization of the unit circle --------------------------------------

    ParamPoint param_point(Elem x) const {
        ParamPoint p;
        p.x = x;
        p.A = ctx_->sqr(x) + x + ctx_->lambda();
        const Elem root = ctx_->sqrt(p.A + FieldCtx::one());
        p.z = ctx_->mul(ctx_->inv(root), Elem2{x, FieldCtx::one()});
        const Elem2 zi = ctx_->inv(p.z);
        p.t = to_base(p.z + zi);
        const Elem2 z3 = ctx_->pow_u(p.z, 3);
        p.s = to_base(z3 + ctx_->inv(z3));
        p.phi = phi_[x.bits];
        return p;
    }

    /// Phi(x) = A + A^-1 + A^-2 with A = x^2 + x + lambda.
    Elem phi(Elem x) const noexcept { return phi_[x.bits]; }

    /// P(A) = A + A^-1 + A^-2.
    Elem P(Elem a) const {
        const Elem ai = ctx_->inv(a);
        return a + ai + ctx_->sqr(ai);
    }

    // -- trace-zero reduction ----------------------------------------------------

    /// T_delta(u) = sum_x chi(delta Phi(x) u^3 + (x + 1) u).
    std::int64_t T_delta(Elem delta, Elem u) const {
        const Elem du3 = ctx_->mul(delta, ctx_->mul(ctx_->sqr(u), u));
        std::int64_t total = 0;
        for (std::uint32_t xb = 0; xb < ctx_->q(); ++xb) {
            const Elem x{xb};
            total += chi(*ctx_, ctx_->mul(du3, phi_[xb]) + ctx_->mul(x + FieldCtx::one(), u));
        }
        return total;
    }

    /// hat h_delta(v) = sum over Tr(A) = 1 of (-1)^(Tr(delta P(A)) + Tr(v A)).
    std::int64_t h_hat(Elem delta, Elem v) const {
        std::int64_t total = 0;
        for (const Elem a : trace_one_) total += chi(*ctx_, ctx_->mul(delta, p_[a.bits]) + ctx_->mul(v, a));
        return total;
    }

    /// 2 chi(lambda v) hat h_{delta u^3}(v) for a representative v of L^{-1}(u).
    std::int64_t T_delta_factored(Elem delta, Elem u, Elem v) const {
        const Elem du3 = ctx_->mul(delta, ctx_->mul(ctx_->sqr(u), u));
        return 2 * chi(*ctx_, ctx_->mul(ctx_->lambda(), v)) * h_hat(du3, v);
    }
    std::int64_t T_delta_factored(Elem delta, Elem u) const {
        return T_delta_factored(delta, u, space_.L_inverse(u));
    }

    // -- shell word --------------------------------------------------------------

    ShellWord shell_word(Elem delta) const {
        if (delta.is_zero()) throw ZeroArgument("shell_word");
        ShellWord w;
        w.delta = delta;
        w.branch = ctx_->is_cube(delta) ? Branch::Cube : Branch::Noncube;
        w.values.reserve(space_.h0().size());
        for (const Elem u : space_.h0()) {
            const std::int64_t t = T_delta(delta, u) - (u.is_zero() ? std::int64_t{ctx_->q()} : 0);
            if (t % 2 != 0) throw Error("T_delta is odd at u=" + to_string(u));  // unreachable
            w.values.push_back(t / 2);
        }
        return w;
    }

    /// 2 sum_{u in H0} chi(c u) U_delta(u).
    std::int64_t shell_hadamard(const ShellWord& w, Elem c) const {
        std::int64_t total = 0;
        const auto& h0 = space_.h0();
        for (std::size_t i = 0; i < h0.size(); ++i) total += chi(*ctx_, ctx_->mul(c, h0[i])) * w.values[i];
        return 2 * total;
    }

    // -- Walsh values on GF(q) for cube alpha ------------------------------------

    /// The three roots of alpha y^3 = 1, as (y1, omega y1, omega^2 y1).
    std::array<Elem, 3> cube_roots_of_inverse(Elem alpha) const {
        if (alpha.is_zero() || !ctx_->is_cube(alpha)) throw AlphaNotCube();
        const std::uint32_t order = ctx_->q() - 1;
        const Elem y1 = ctx_->exp(order - ctx_->log(alpha) / 3);
        const Elem y2 = ctx_->mul(ctx_->omega(), y1);
        return {y1, y2, ctx_->mul(ctx_->omega(), y2)};
    }

    /// -2q if Tr(beta y_i) = 0 for all three roots, else 2q.
    std::int64_t predict_inner_walsh(Elem alpha, Elem beta) const {
        const auto ys = cube_roots_of_inverse(alpha);
        const std::int64_t q = ctx_->q();
        for (const Elem y : ys)
            if (ctx_->tr(ctx_->mul(beta, y)) != 0) return 2 * q;
        return -2 * q;
    }

private:
    Elem compute_phi(Elem x) const {
        const Elem a = ctx_->sqr(x) + x + ctx_->lambda();
        const Elem ai = ctx_->inv(a);
        return a + ai + ctx_->sqr(ai);
    }

    // GF(q^2) values that must be Frobenius-fixed.
    static Elem to_base(Elem2 x) {
        if (!FieldCtx::in_base(x)) throw Error("value expected in GF(q) is not Frobenius-fixed");
        return x.a0;
    }

    const FieldCtx* ctx_;
    TraceZeroSpace space_;
    std::vector<Elem2> mu_;
    std::vector<Elem> phi_;
    std::vector<Elem> p_;
    std::vector<Elem> trace_one_;
};

// -- verifiers -------------------------------------------------------------------

/// Both T-set constructions agree, |T| = q/2, and z -> z + 1/z is two-to-one.
inline Check verify_t_set(const ReductionLab& lab) {
    const FieldCtx& ctx = lab.ctx();
    Check ck("lemma.t_set");
    const auto image = lab.t_set_image();
    const auto trace = lab.t_set_trace();
    ck.record(image == trace, [&] { return "image form has " + std::to_string(image.size()) +
                                           " elements, trace form " + std::to_string(trace.size()); });
    ck.record(image.size() == ctx.q() / 2, "|T| != q/2");
    std::map<Elem, int> preimages;
    for (const Elem2& z : lab.mu())
        if (z != FieldCtx::one2()) ++preimages[(z + ctx.inv(z)).a0];
    for (const auto& [t, n] : preimages)
        ck.record(n == 2, [&, t = t, n = n] { return "t=" + to_string(t) + " has " + std::to_string(n) + " preimages"; });
    return ck;
}

/// Every identity of the x -> z_x parametrization, for all x, all alpha and all
/// beta outside GF(q).
inline Check verify_parametrization(const ReductionLab& lab) {
    const FieldCtx& ctx = lab.ctx();
    Check ck("lemma.parametrization");
    std::vector<ParamPoint> pts;
    std::set<std::uint32_t> image;
    for (std::uint32_t xb = 0; xb < ctx.q(); ++xb) {
        const ParamPoint p = lab.param_point(Elem{xb});
        const auto where = [&](const char* what) { return std::string(what) + " at x=" + to_string(p.x); };
        ck.record(ctx.in_mu(p.z) && p.z != FieldCtx::one2(), [&] { return where("z_x not in mu*"); });
        image.insert(ctx.encode(p.z));
        const Elem root_inv = ctx.inv(ctx.sqrt(p.A + FieldCtx::one()));
        ck.record(p.t == root_inv, [&] { return where("t_x != (A+1)^(-1/2)"); });
        ck.record(p.s == ctx.mul(p.A, ctx.mul(ctx.sqr(root_inv), root_inv)), [&] { return where("s_x != A(A+1)^(-3/2)"); });
        ck.record(!p.s.is_zero(), [&] { return where("s_x = 0"); });
        ck.record(!p.s.is_zero() && FieldCtx::one() + ctx.pow(p.s, -2) == p.phi, [&] { return where("1 + s^-2 != Phi"); });
        pts.push_back(p);
    }
    ck.record(image.size() == ctx.q(), "x -> z_x is not injective");
    for (const ParamPoint& p : pts) {
        const ParamPoint p1 = pts[(p.x + FieldCtx::one()).bits];
        ck.record(p1.z == ctx.inv(p.z), [&] { return "z_{x+1} != 1/z_x at x=" + to_string(p.x); });
    }
    for (std::uint32_t ab = 1; ab < ctx.q(); ++ab) {
        const Elem alpha{ab};
        for (const ParamPoint& p : pts) {
            const Elem want = ctx.mul(alpha, ctx.mul(ctx.sqr(p.s), p.s) + p.s);
            ck.record(lab.P_alpha(alpha, p.z) == want,
                      [&] { return "P_alpha(z_x) != alpha(s^3+s) at alpha=" + to_string(alpha) + " x=" + to_string(p.x); });
        }
    }
    struct Powers {
        Elem2 sum, cube, cube_inv;
    };
    std::vector<Powers> pw;
    for (const ParamPoint& p : pts) {
        const Elem2 z3 = ctx.pow_u(p.z, 3);
        pw.push_back({p.z + ctx.inv(p.z), z3, ctx.inv(z3)});
    }
    for (std::uint32_t k = ctx.q(); k < ctx.q2(); ++k) {
        const Elem2 beta = ctx.decode(k);
        const BetaFrame f = lab.beta_frame(FieldCtx::one(), beta);
        ck.record(ctx.mul(f.b, Elem2{f.c, FieldCtx::one()}) == beta, [&] { return "beta != b(c+theta) at " + to_string(beta); });
        for (const ParamPoint& p : pts) {
            const Elem want = ctx.mul(f.b, ctx.mul(f.c + p.x + FieldCtx::one(), p.s));
            const Powers& w = pw[p.x.bits];
            ck.record(lab.Q_beta(beta, w.sum, w.cube, w.cube_inv) == want,
                      [&] { return "Q_beta(z_x) != b(c+x+1)s_x at beta=" + to_string(beta) + " x=" + to_string(p.x); });
        }
    }
    return ck;
}

/// P(A) = A + A^-1 + A^-2 permutes the trace-one set and equals
/// s1 o s2 o s1^{-1} with s1(t) = 1 + t^-2 and s2(z + 1/z) = z^3 + z^-3.
inline Check verify_P_permutes(const ReductionLab& lab) {
    const FieldCtx& ctx = lab.ctx();
    Check ck("lemma.p_permutation");
    std::map<Elem, Elem2> z_of_t;
    for (const Elem2& z : lab.mu())
        if (z != FieldCtx::one2()) z_of_t.emplace((z + ctx.inv(z)).a0, z);
    std::set<Elem> image;
    for (const Elem a : lab.trace_one()) {
        const Elem pa = lab.P(a);
        ck.record(ctx.tr(pa) == 1, [&] { return "Tr(P(A)) != 1 at A=" + to_string(a); });
        image.insert(pa);
        const Elem t = ctx.inv(ctx.sqrt(a + FieldCtx::one()));  // s1^{-1}(A)
        const auto it = z_of_t.find(t);
        if (!ck.record(it != z_of_t.end(), [&] { return "s1^{-1}(A) not in T at A=" + to_string(a); })) continue;
        const Elem2 z3 = ctx.pow_u(it->second, 3);
        const Elem s2 = (z3 + ctx.inv(z3)).a0;
        ck.record(FieldCtx::one() + ctx.pow(s2, -2) == pa, [&] { return "P != s1 s2 s1^-1 at A=" + to_string(a); });
    }
    const std::set<Elem> domain(lab.trace_one().begin(), lab.trace_one().end());
    ck.record(image == domain, "P is not a bijection of the trace-one set");
    return ck;
}

/// L is an isomorphism GF(q)/F2 -> H0, the Artin-Schreier adjointness
/// Tr((x^2 + x) v) = Tr(x L(v)) holds, and chi(lambda v) changes sign under v -> v + 1.
inline Check verify_trace_zero_space(const ReductionLab& lab) {
    const FieldCtx& ctx = lab.ctx();
    const TraceZeroSpace& sp = lab.space();
    Check ck("lemma.trace_zero_space");
    ck.record(sp.h0().size() == ctx.q() / 2, "|H0| != q/2");
    std::set<Elem> image;
    for (const Elem v : sp.coset_reps()) {
        const Elem u = sp.L(v);
        ck.record(ctx.tr(u) == 0 && u == sp.L(v + FieldCtx::one()), [&] { return "L ill-defined at v=" + to_string(v); });
        ck.record(sp.L_inverse(u) == v, [&] { return "L^{-1}(L(v)) != v at v=" + to_string(v); });
        ck.record(chi(ctx, ctx.mul(ctx.lambda(), v + FieldCtx::one())) == -chi(ctx, ctx.mul(ctx.lambda(), v)),
                  [&] { return "chi(lambda v) does not flip at v=" + to_string(v); });
        image.insert(u);
    }
    ck.record(image.size() == sp.h0().size(), "L is not onto H0");
    for (std::uint32_t xb = 0; xb < ctx.q(); ++xb) {
        const Elem x{xb};
        for (std::uint32_t vb = 0; vb < ctx.q(); ++vb) {
            const Elem v{vb};
            ck.record(ctx.tr(ctx.mul(ctx.sqr(x) + x, v)) == ctx.tr(ctx.mul(x, sp.L(v))),
                      [&] { return "adjointness fails at x=" + to_string(x) + " v=" + to_string(v); });
        }
    }
    return ck;
}

/// T_delta vanishes off H0, equals q at 0, is even, and on H0 factors as
/// 2 chi(lambda v) hat h_{delta u^3}(v) for both representatives v of L^{-1}(u);
/// hat h also flips sign under v -> v + 1.
inline Check verify_T_delta(const ReductionLab& lab, Elem delta) {
    const FieldCtx& ctx = lab.ctx();
    Check ck("lemma.t_delta");
    const auto tag = [&](const char* what, Elem u) {
        return std::string(what) + " at delta=" + to_string(delta) + " u=" + to_string(u);
    };
    for (std::uint32_t ub = 0; ub < ctx.q(); ++ub) {
        const Elem u{ub};
        const std::int64_t t = lab.T_delta(delta, u);
        ck.record(t % 2 == 0, [&] { return tag("T odd", u); });
        if (ctx.tr(u) == 1) {
            ck.record(t == 0, [&] { return tag("T != 0 off H0", u); });
            continue;
        }
        if (u.is_zero()) {
            ck.record(t == std::int64_t{ctx.q()}, [&] { return tag("T(0) != q", u); });
            continue;
        }
        const Elem v = lab.space().L_inverse(u);
        const Elem v1 = v + FieldCtx::one();
        ck.record(t == lab.T_delta_factored(delta, u, v), [&] { return tag("factorization fails", u); });
        ck.record(t == lab.T_delta_factored(delta, u, v1), [&] { return tag("factorization depends on v", u); });
        const Elem du3 = ctx.mul(delta, ctx.mul(ctx.sqr(u), u));
        ck.record(lab.h_hat(du3, v1) == -lab.h_hat(du3, v), [&] { return tag("hat h does not flip", u); });
    }
    return ck;
}

}  // namespace permwalsh
