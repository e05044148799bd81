// Acceptance run: one PASS/FAIL line per criterion, exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <permwalsh/perm_map.hpp>
#include <permwalsh/reduction.hpp>
#include <permwalsh/verify.hpp>
#include <permwalsh/walsh.hpp>

using namespace permwalsh;

namespace {

using Values = std::set<std::int64_t>;

struct Outcome {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

std::string alpha_tag(int e, Elem a) { return "e=" + std::to_string(e) + " alpha=" + std::to_string(a.bits); }

Values keys(const Histogram& h) {
    Values v;
    for (const auto& [value, n] : h) v.insert(value);
    return v;
}

Histogram expected_distribution(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    const auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
    if (!cube) return {{q, u(q * (q + 1) / 2)}, {-q, u(q * (q - 1) / 2)}};
    if (e == 2) return {{2 * q, 3}, {-2 * q, 1}, {0, 12}};
    return {{2 * q, u(q * (q + 2) / 8)}, {-2 * q, u(q * (q - 2) / 8)}, {0, u(3 * q * q / 4)}};
}

Values expected_inner(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    return cube ? Values{2 * q, -2 * q} : Values{q};
}

Values expected_outer(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    if (!cube) return {q, -q};
    return e == 2 ? Values{0} : Values{-2 * q, 0, 2 * q};
}

struct Row {
    int id;
    std::string text;
    Outcome out;
    double seconds = 0;
};

}  // namespace

int main() {
    const std::vector<int> degrees{2, 4, 6, 8};
    std::map<int, Row> rows;
    rows[1].text = "is_bent(f_alpha) == !is_cube(alpha), e in {2,4,6,8}, all alpha";
    rows[2].text = "full Walsh distribution equals the branch multiset";
    rows[3].text = "inner/outer value sets match the branch statements";
    rows[4].text = "closed-form inverse == table inverse and g_alpha == f_alpha, e in {2,4,6}";
    rows[5].text = "lemma suite passes with zero counterexamples";
    rows[6].text = "shell branch law for every delta; e=2 cube word identically zero";
    rows[7].text = "sum W = q^2 and sum W^2 = q^4 for every spectrum";
    rows[8].text = "fast transform == naive transform (exhaustive e<=4, 1000 beta per alpha e>=6)";

    using clock = std::chrono::steady_clock;
    const auto secs = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    for (const int e : degrees) {
        const FieldCtx ctx(e);
        const std::int64_t q = ctx.q();
        const SigmaTable sig = sigma_inverse_table(ctx);
        const auto gram = trace_gram_matrix(ctx);
        std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(e));

        for (std::uint32_t ab = 1; ab < ctx.q(); ++ab) {
            const Elem alpha{ab};
            const bool cube = ctx.is_cube(alpha);
            const std::string tag = alpha_tag(e, alpha);

            auto t0 = clock::now();
            const TruthTable tt = f_alpha_table(ctx, sig, alpha);
            const Spectrum s = walsh_full(ctx, tt, gram);
            rows[1].out.expect(is_bent(s) == !cube, tag);
            rows[1].seconds += secs(t0);

            t0 = clock::now();
            rows[2].out.expect(s.histogram == expected_distribution(e, cube), tag);
            rows[2].seconds += secs(t0);

            t0 = clock::now();
            Histogram inner, outer;
            for (std::uint32_t k = 0; k < ctx.q2(); ++k) (k < ctx.q() ? inner : outer)[s.coeffs[k]]++;
            rows[3].out.expect(keys(inner) == expected_inner(e, cube), tag + " inner");
            rows[3].out.expect(keys(outer) == expected_outer(e, cube), tag + " outer");
            rows[3].out.expect(inner == s.inner && outer == s.outer, tag + " split");
            rows[3].seconds += secs(t0);

            t0 = clock::now();
            std::int64_t sum = 0, sq = 0;
            for (const auto w : s.coeffs) {
                sum += w;
                sq += w * w;
            }
            rows[7].out.expect(sum == q * q && sq == q * q * q * q, tag);
            rows[7].seconds += secs(t0);

            t0 = clock::now();
            if (e <= 4) {
                for (std::uint32_t k = 0; k < ctx.q2(); ++k)
                    rows[8].out.expect(s.coeffs[k] == walsh_naive(ctx, tt, ctx.decode(k)), tag + " k=" + std::to_string(k));
            } else {
                for (int i = 0; i < 1000; ++i) {
                    const auto k = static_cast<std::uint32_t>(rng() % ctx.q2());
                    rows[8].out.expect(s.coeffs[k] == walsh_naive(ctx, tt, ctx.decode(k)), tag + " k=" + std::to_string(k));
                }
            }
            rows[8].seconds += secs(t0);
        }

        if (e <= 6) {
            const auto t0 = clock::now();
            const CosetIndex cosets(ctx);
            for (std::uint32_t k = 0; k < ctx.q2(); ++k)
                rows[4].out.expect(sigma_inverse_closed(cosets, ctx.decode(k)) == sig.backward[k],
                                   "e=" + std::to_string(e) + " x=" + std::to_string(k));
            for (std::uint32_t ab = 1; ab < ctx.q(); ++ab)
                rows[4].out.expect(g_alpha_table(ctx, cosets, Elem{ab}) == f_alpha_table(ctx, sig, Elem{ab}),
                                   alpha_tag(e, Elem{ab}));
            rows[4].seconds += secs(t0);
        }

        {
            const auto t0 = clock::now();
            VerifyOptions opt;
            opt.suite = Suite::All;
            opt.seed = 1;
            const std::set<std::string> wanted{"lemma.basic_reduction", "lemma.t_set",         "lemma.parametrization",
                                               "lemma.p_permutation",   "lemma.t_delta",       "shell.word_well_defined",
                                               "lemma.inner_prediction", "lemma.trace_zero_space"};
            Verifier v(ctx, opt);
            std::set<std::string> seen;
            auto checks = v.lemmas();
            for (auto& c : v.shells()) checks.push_back(std::move(c));
            for (const auto& c : checks) {
                if (!wanted.count(c.id)) continue;
                seen.insert(c.id);
                rows[5].out.expect(c.passed && c.checked > 0,
                                   "e=" + std::to_string(e) + " " + c.id + ": " + c.counterexample.value_or("no checks"));
            }
            rows[5].out.expect(seen == wanted, "e=" + std::to_string(e) + " missing lemma checks");
            rows[5].seconds += secs(t0);
        }

        {
            const auto t0 = clock::now();
            const ReductionLab lab(ctx);
            for (std::uint32_t d = 1; d < ctx.q(); ++d) {
                const Elem delta{d};
                const bool cube = ctx.is_cube(delta);
                const ShellWord w = lab.shell_word(delta);
                Values allowed;
                if (!cube)
                    allowed = {q, -q};
                else if (e == 2)
                    allowed = {0};
                else
                    allowed = {-2 * q, 0, 2 * q};
                for (std::uint32_t c = 0; c < ctx.q(); ++c)
                    rows[6].out.expect(allowed.count(lab.shell_hadamard(w, Elem{c})) == 1,
                                       "e=" + std::to_string(e) + " delta=" + std::to_string(d) + " c=" + std::to_string(c));
                if (e == 2 && cube) {
                    bool zero = true;
                    for (const auto x : w.values) zero = zero && x == 0;
                    rows[6].out.expect(zero, "e=2 delta=" + std::to_string(d) + " word not zero");
                }
            }
            rows[6].seconds += secs(t0);
        }
    }

    int failures = 0;
    for (const auto& [id, row] : rows) {
        std::printf("%s criterion %d: %s [%llu checks, %.2fs]%s%s\n", row.out.ok ? "PASS" : "FAIL", id,
                    row.text.c_str(), static_cast<unsigned long long>(row.out.checked), row.seconds,
                    row.out.ok ? "" : " first failure: ", row.out.first_failure.c_str());
        failures += !row.out.ok;
    }
    return failures == 0 ? 0 : 1;
}
