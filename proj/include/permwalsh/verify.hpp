#pragma once

// Verification suites: every identity of the spectrum computation checked
// exhaustively for e <= 4 and on seeded samples above that.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "check.hpp"
#include "field.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "perm_map.hpp"
#include "reduction.hpp"
#include "theory.hpp"
#include "walsh.hpp"

namespace permwalsh {

enum class Suite { All, Theorems, Lemmas, Shells };

struct VerifyOptions {
    Suite suite = Suite::All;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Sample budget for e >= 6: random beta per alpha for the transform
    /// comparison, random (alpha, beta) pairs for the double sum, and the total
    /// over alpha for the three-way outer comparison.
    std::uint64_t samples = 1000;
    /// Fields up to this e are checked exhaustively.
    int exhaustive_max_e = 4;
};

/// Deterministic per-stream random source; streams are independent of thread
/// scheduling.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint64_t stream) : rng_(splitmix(seed ^ splitmix(stream + 0x9e3779b97f4a7c15ULL))) {}

    /// Uniform-ish integer in [0, n); modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::mt19937_64 rng_;
};

class Verifier {
public:
    Verifier(const FieldCtx& ctx, VerifyOptions opt)
        : ctx_(&ctx), opt_(opt), lab_(ctx), exhaustive_(ctx.e() <= opt.exhaustive_max_e) {}

    /// Runs the selected suite; results sorted by id.
    std::vector<Check> run() {
        std::vector<Check> out;
        const auto add = [&](std::vector<Check> v) { out.insert(out.end(), v.begin(), v.end()); };
        if (opt_.suite == Suite::All || opt_.suite == Suite::Theorems) add(theorems());
        if (opt_.suite == Suite::All || opt_.suite == Suite::Lemmas) add(lemmas());
        if (opt_.suite == Suite::All || opt_.suite == Suite::Shells) add(shells());
        std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
        return out;
    }

    std::vector<Check> theorems() {
        const FieldCtx& ctx = *ctx_;
        const int e = ctx.e();
        const std::int64_t q = ctx.q();
        Check perm("perm.sigma_permutation");
        Check closed("thm.closed_form_inverse");
        const SigmaTable& sig = sigma();
        const CosetIndex& cos = cosets();
        for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
            const Elem2 x = ctx.decode(k);
            perm.record(sig.invert(ctx, sig.forward[k]) == x,
                        [&] { return "sigma^-1(sigma(x)) != x at x=" + to_string(x); });
            closed.record(sigma_inverse_closed(cos, x) == sig.backward[k],
                          [&] { return "closed form != table at x=" + to_string(x); });
        }
        perm.record(sig.forward[0].is_zero(), "sigma(0) != 0");

        const auto gram = trace_gram_matrix(ctx);
        const std::size_t n_alpha = ctx.q() - 1;
        struct Partial {
            Check family{"thm.cyclotomic_family"};
            Check inner{"thm.inner_values"};
            Check outer{"thm.outer_values"};
            Check outer_nz{"thm.outer_nonzero_count"};
            Check dist{"cor.distribution"};
            Check bent{"cor.bent_iff_noncube"};
            Check orth{"walsh.orthogonality"};
            Check fast{"walsh.fast_naive"};
        };
        std::vector<Partial> parts(n_alpha);
        parallel_for(n_alpha, opt_.workers, [&](std::size_t i) {
            Partial& p = parts[i];
            const Elem alpha{static_cast<std::uint32_t>(i + 1)};
            const bool cube = ctx.is_cube(alpha);
            const std::string at = "alpha=" + to_string(alpha);
            const TruthTable f = f_alpha_table(ctx, sig, alpha);
            const TruthTable g = g_alpha_table(ctx, cos, alpha);
            p.family.record(f == g, [&] { return "g_alpha != f_alpha at " + at; });
            const Spectrum s = walsh_full(ctx, f, gram);
            p.inner.record(support(s.inner) == predicted_inner_values(e, cube), [&] { return at; });
            p.outer.record(support(s.outer) == predicted_outer_values(e, cube), [&] { return at; });
            if (cube) {
                const std::uint64_t zeros = s.outer.count(0) ? s.outer.at(0) : 0;
                p.outer_nz.record(s.outer.size() > 0 && ctx.q2() - q - zeros == predicted_outer_nonzero(e),
                                  [&] { return at; });
            }
            p.dist.record(s.histogram == predicted_distribution(e, cube), [&] { return at; });
            p.bent.record(is_bent(s) == !cube, [&] { return at; });
            p.orth.record(coeff_sum(s) == q * q && coeff_square_sum(s) == q * q * q * q, [&] { return at; });
            if (exhaustive_) {
                for (std::uint32_t k = 0; k < ctx.q2(); ++k)
                    p.fast.record(walsh_naive(ctx, f, ctx.decode(k)) == s.coeffs[k],
                                  [&] { return at + " beta=" + to_string(ctx.decode(k)); });
            } else {
                Sampler rng(opt_.seed, 0x1000 + i);
                for (std::uint64_t j = 0; j < opt_.samples; ++j) {
                    const auto k = static_cast<std::uint32_t>(rng.below(ctx.q2()));
                    p.fast.record(walsh_naive(ctx, f, ctx.decode(k)) == s.coeffs[k],
                                  [&] { return at + " beta=" + to_string(ctx.decode(k)); });
                }
            }
        });
        Partial total;
        for (const Partial& p : parts) {
            total.family.merge(p.family);
            total.inner.merge(p.inner);
            total.outer.merge(p.outer);
            total.outer_nz.merge(p.outer_nz);
            total.dist.merge(p.dist);
            total.bent.merge(p.bent);
            total.orth.merge(p.orth);
            total.fast.merge(p.fast);
        }
        return {perm, closed, total.family, total.inner, total.outer, total.outer_nz,
                total.dist, total.bent, total.orth, total.fast};
    }

    std::vector<Check> lemmas() {
        const FieldCtx& ctx = *ctx_;
        std::vector<Check> out{field_invariants(), basic_reduction(), verify_t_set(lab_), verify_parametrization(lab_),
                               verify_P_permutes(lab_), verify_trace_zero_space(lab_), kappa_branch(),
                               inner_prediction()};
        Check td("lemma.t_delta");
        std::vector<std::optional<Check>> parts(ctx.q() - 1);
        parallel_for(parts.size(), opt_.workers, [&](std::size_t i) {
            parts[i] = verify_T_delta(lab_, Elem{static_cast<std::uint32_t>(i + 1)});
        });
        for (const auto& p : parts) td.merge(*p);
        out.push_back(td);
        return out;
    }

    std::vector<Check> shells() {
        const FieldCtx& ctx = *ctx_;
        const int e = ctx.e();
        const auto& words = shell_words();
        const auto& h0 = lab_.space().h0();
        Check defined("shell.word_well_defined");
        Check branch("shell.branch_law");
        for (const ShellWord& w : words) {
            const std::string at = "delta=" + to_string(w.delta);
            for (std::size_t i = 0; i < h0.size(); ++i) {
                const Elem u = h0[i];
                if (u.is_zero()) {
                    defined.record(w.values[i] == 0, [&] { return at + " U(0) != 0"; });
                    continue;
                }
                const Elem v = lab_.space().L_inverse(u);
                const Elem du3 = ctx.mul(w.delta, ctx.mul(ctx.sqr(u), u));
                const std::int64_t a = chi(ctx, ctx.mul(ctx.lambda(), v)) * lab_.h_hat(du3, v);
                const Elem v1 = v + FieldCtx::one();
                const std::int64_t b = chi(ctx, ctx.mul(ctx.lambda(), v1)) * lab_.h_hat(du3, v1);
                defined.record(a == b && a == w.values[i], [&] { return at + " u=" + to_string(u); });
            }
            const auto allowed = predicted_shell_values(e, w.branch == Branch::Cube);
            for (std::uint32_t c = 0; c < ctx.q(); ++c) {
                const std::int64_t h = lab_.shell_hadamard(w, Elem{c});
                branch.record(allowed.count(h) == 1,
                              [&] { return at + " c=" + to_hex(c) + " value=" + std::to_string(h); });
            }
        }
        std::vector<Check> out{defined, branch, triple_agreement()};
        if (e == 2) {
            Check zero("shell.e2_zero_word");
            for (const ShellWord& w : words)
                if (w.branch == Branch::Cube)
                    zero.record(w.is_zero(), [&] { return "delta=" + to_string(w.delta); });
            zero.record(lab_.h_hat(FieldCtx::one(), ctx.omega()) == 0, "hat h_1(omega) != 0");
            out.push_back(zero);
        }
        return out;
    }

private:
    const SigmaTable& sigma() {
        if (!sigma_) sigma_ = sigma_inverse_table(*ctx_);
        return *sigma_;
    }
    const CosetIndex& cosets() {
        if (!cosets_) cosets_.emplace(*ctx_);
        return *cosets_;
    }
    const std::vector<ShellWord>& shell_words() {
        if (words_.empty()) {
            words_.resize(ctx_->q() - 1);
            parallel_for(words_.size(), opt_.workers, [&](std::size_t i) {
                words_[i] = lab_.shell_word(Elem{static_cast<std::uint32_t>(i + 1)});
            });
        }
        return words_;
    }

    Check field_invariants() {
        const FieldCtx& ctx = *ctx_;
        Check ck("field.invariants");
        Sampler rng(opt_.seed, 0x2000);
        const std::uint64_t pairs = exhaustive_ ? ctx.q2() * ctx.q2() : 10000;
        for (std::uint64_t j = 0; j < pairs; ++j) {
            const Elem2 a = exhaustive_ ? ctx.decode(static_cast<std::uint32_t>(j / ctx.q2()))
                                        : ctx.decode(static_cast<std::uint32_t>(rng.below(ctx.q2())));
            const Elem2 b = exhaustive_ ? ctx.decode(static_cast<std::uint32_t>(j % ctx.q2()))
                                        : ctx.decode(static_cast<std::uint32_t>(rng.below(ctx.q2())));
            ck.record(FieldCtx::conj(a + b) == FieldCtx::conj(a) + FieldCtx::conj(b) &&
                          FieldCtx::conj(ctx.mul(a, b)) == ctx.mul(FieldCtx::conj(a), FieldCtx::conj(b)),
                      [&] { return "Frobenius fails at " + to_string(a) + ", " + to_string(b); });
        }
        for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
            const Elem2 x = ctx.decode(k);
            Elem2 p = x, s = x;
            for (int i = 1; i < 2 * ctx.e(); ++i) {
                p = ctx.sqr(p);
                s += p;
            }
            const Elem2 t = x + FieldCtx::conj(x);
            ck.record(FieldCtx::in_base(s) && s.a0.bits == static_cast<std::uint32_t>(ctx.tr2(x)) &&
                          FieldCtx::in_base(t) && ctx.tr2(x) == ctx.tr(t.a0),
                      [&] { return "trace transitivity fails at " + to_string(x); });
            ck.record(FieldCtx::conj(FieldCtx::conj(x)) == x && ctx.pow_u(x, ctx.q()) == FieldCtx::conj(x),
                      [&] { return "conjugation is not x^q at " + to_string(x); });
        }
        std::vector<Elem> as_image;
        for (std::uint32_t x = 0; x < ctx.q(); ++x) as_image.push_back(ctx.sqr(Elem{x}) + Elem{x});
        std::sort(as_image.begin(), as_image.end());
        as_image.erase(std::unique(as_image.begin(), as_image.end()), as_image.end());
        ck.record(as_image == lab_.space().h0(), "Artin-Schreier image != H0");
        std::vector<bool> hit(ctx.q2(), false);
        for (std::uint32_t y = 1; y < ctx.q(); ++y) {
            for (const Elem2& z : lab_.mu()) {
                const auto k = ctx.encode(ctx.mul(Elem{y}, z));
                ck.record(!hit[k], [&] { return "(y,z) -> yz collides at y=" + to_hex(y) + " z=" + to_string(z); });
                hit[k] = true;
            }
        }
        ck.record(!hit[0] && std::count(hit.begin(), hit.end(), true) == static_cast<long>(ctx.q2() - 1),
                  "(y,z) -> yz is not onto GF(q^2)^*");
        return ck;
    }

    Check basic_reduction() {
        const FieldCtx& ctx = *ctx_;
        Check ck("lemma.basic_reduction");
        std::map<std::uint32_t, std::vector<std::uint32_t>> betas;  // alpha -> beta encodings
        if (exhaustive_) {
            for (std::uint32_t a = 1; a < ctx.q(); ++a)
                for (std::uint32_t k = 0; k < ctx.q2(); ++k) betas[a].push_back(k);
        } else {
            Sampler rng(opt_.seed, 0x3000);
            for (std::uint64_t j = 0; j < opt_.samples; ++j) {
                const auto a = static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1));
                betas[a].push_back(static_cast<std::uint32_t>(rng.below(ctx.q2())));
            }
        }
        std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> work(betas.begin(), betas.end());
        std::vector<std::optional<Check>> parts(work.size());
        const SigmaTable& sig = sigma();
        parallel_for(work.size(), opt_.workers, [&](std::size_t i) {
            Check p("lemma.basic_reduction");
            const Elem alpha{work[i].first};
            const TruthTable f = f_alpha_table(ctx, sig, alpha);
            for (const auto k : work[i].second) {
                const Elem2 beta = ctx.decode(k);
                p.record(lab_.basic_reduction_sum(alpha, beta) == walsh_naive(ctx, f, beta),
                         [&] { return "alpha=" + to_string(alpha) + " beta=" + to_string(beta); });
            }
            parts[i] = p;
        });
        for (const auto& p : parts) ck.merge(*p);
        return ck;
    }

    Check kappa_branch() {
        const FieldCtx& ctx = *ctx_;
        Check ck("lemma.kappa_branch");
        for (std::uint32_t a = 1; a < ctx.q(); ++a) {
            for (std::uint32_t b = 1; b < ctx.q(); ++b) {
                const Elem alpha{a};
                // beta = b theta is the representative with b = beta + beta^q.
                const BetaFrame f = lab_.beta_frame(alpha, Elem2{Elem{0}, Elem{b}});
                ck.record(ctx.is_cube(f.kappa) == ctx.is_cube(alpha),
                          [&] { return "alpha=" + to_string(alpha) + " b=" + to_hex(b); });
            }
        }
        return ck;
    }

    Check inner_prediction() {
        const FieldCtx& ctx = *ctx_;
        Check ck("lemma.inner_prediction");
        for (std::uint32_t a = 1; a < ctx.q(); ++a) {
            const Elem alpha{a};
            if (!ctx.is_cube(alpha)) continue;
            const std::string at = "alpha=" + to_string(alpha);
            const auto ys = lab_.cube_roots_of_inverse(alpha);
            for (const Elem y : ys)
                ck.record(ctx.mul(alpha, ctx.mul(ctx.sqr(y), y)) == FieldCtx::one(), [&] { return at + " root"; });
            ck.record((ys[0] + ys[1] + ys[2]).is_zero(), [&] { return at + " y1+y2+y3 != 0"; });
            const TruthTable f = f_alpha_table(ctx, sigma(), alpha);
            std::vector<Elem> w1;
            for (std::uint32_t bb = 0; bb < ctx.q(); ++bb) {
                const Elem beta{bb};
                int ones = 0;
                for (const Elem y : ys) ones += ctx.tr(ctx.mul(beta, y));
                ck.record(ones % 2 == 0, [&] { return at + " odd parity at beta=" + to_string(beta); });
                const std::int64_t want = lab_.predict_inner_walsh(alpha, beta);
                if (want < 0) w1.push_back(beta);
                ck.record(want == walsh_naive(ctx, f, lift(beta)),
                          [&] { return at + " prediction fails at beta=" + to_string(beta); });
            }
            ck.record(w1.size() == ctx.q() / 4, [&] { return at + " |W1| != q/4"; });
            bool closed = true;
            for (const Elem x : w1)
                for (const Elem y : w1) closed = closed && std::binary_search(w1.begin(), w1.end(), x + y);
            ck.record(closed, [&] { return at + " W1 is not a subspace"; });
        }
        return ck;
    }

    /// W(beta) three ways for beta outside GF(q): the definition, the (y, z)
    /// double sum, and 2 sum chi(c u) U_kappa(u).
    Check triple_agreement() {
        const FieldCtx& ctx = *ctx_;
        const auto& words = shell_words();
        Check ck("shell.triple_agreement");
        const std::size_t n_alpha = ctx.q() - 1;
        const std::uint64_t per_alpha = (opt_.samples + n_alpha - 1) / n_alpha;
        std::vector<std::optional<Check>> parts(n_alpha);
        const SigmaTable& sig = sigma();
        parallel_for(n_alpha, opt_.workers, [&](std::size_t i) {
            Check p("shell.triple_agreement");
            const Elem alpha{static_cast<std::uint32_t>(i + 1)};
            const TruthTable f = f_alpha_table(ctx, sig, alpha);
            std::vector<std::uint32_t> ks;
            if (exhaustive_) {
                for (std::uint32_t k = ctx.q(); k < ctx.q2(); ++k) ks.push_back(k);
            } else {
                Sampler rng(opt_.seed, 0x4000 + i);
                for (std::uint64_t j = 0; j < per_alpha; ++j)
                    ks.push_back(static_cast<std::uint32_t>(ctx.q() + rng.below(ctx.q2() - ctx.q())));
            }
            for (const auto k : ks) {
                const Elem2 beta = ctx.decode(k);
                const BetaFrame fr = lab_.beta_frame(alpha, beta);
                const std::int64_t w = walsh_naive(ctx, f, beta);
                const std::int64_t via_sum = lab_.basic_reduction_sum(alpha, beta);
                const std::int64_t via_shell = lab_.shell_hadamard(words[fr.kappa.bits - 1], fr.c);
                p.record(w == via_sum && w == via_shell, [&] {
                    return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " W=" + std::to_string(w) +
                           " sum=" + std::to_string(via_sum) + " shell=" + std::to_string(via_shell);
                });
            }
            parts[i] = p;
        });
        for (const auto& p : parts) ck.merge(*p);
        return ck;
    }

    const FieldCtx* ctx_;
    VerifyOptions opt_;
    ReductionLab lab_;
    bool exhaustive_;
    std::optional<SigmaTable> sigma_;
    std::optional<CosetIndex> cosets_;
    std::vector<ShellWord> words_;
};

inline std::vector<Check> run_verification(const FieldCtx& ctx, const VerifyOptions& opt) {
    return Verifier(ctx, opt).run();
}

}  // namespace permwalsh
