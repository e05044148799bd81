#pragma once

// Deterministic JSON/CSV reports behind the command-line tool. Every command
// returns its full output text plus the process exit code: 0 when everything
// checked out, 1 when any verification failed. Usage errors surface as
// exceptions and are mapped to exit code 2 by the caller.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "perm_map.hpp"
#include "reduction.hpp"
#include "theory.hpp"
#include "verify.hpp"
#include "walsh.hpp"

namespace permwalsh {

inline constexpr const char* kToolName = "permwalsh";
inline constexpr const char* kToolVersion = "1.0.0";

using ojson = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct RunConfig {
    int e = 2;
    std::optional<std::string> alpha;  // hex
    Suite suite = Suite::All;
    Format format = Format::Json;
    std::uint64_t seed = 0;
    unsigned parallelism = 0;  // 0: one worker per hardware thread
};

struct CommandResult {
    std::string output;
    int exit_code = 0;
};

inline const char* to_string(Suite s) noexcept {
    switch (s) {
        case Suite::Theorems: return "theorems";
        case Suite::Lemmas: return "lemmas";
        case Suite::Shells: return "shells";
        case Suite::All: break;
    }
    return "all";
}

inline const char* to_string(Format f) noexcept { return f == Format::Csv ? "csv" : "json"; }

inline unsigned effective_workers(const RunConfig& cfg) {
    if (cfg.parallelism != 0) return cfg.parallelism;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Parses --alpha against the field; BadAlpha on anything but a nonzero element.
inline Elem parse_alpha(const FieldCtx& ctx, const std::optional<std::string>& text) {
    if (!text) throw BadAlpha("missing");
    Elem a;
    try {
        a = parse_elem(ctx, *text);
    } catch (const ParseError& err) {
        throw BadAlpha(err.what());
    }
    if (a.is_zero()) throw BadAlpha("alpha must be nonzero");
    return a;
}

inline ojson context_summary(const FieldCtx& ctx) {
    ojson j;
    j["e"] = ctx.e();
    j["q"] = ctx.q();
    j["modulus"] = to_hex(ctx.modulus());
    j["lambda"] = to_string(ctx.lambda());
    j["g"] = to_string(ctx.generator());
    j["u"] = to_string(ctx.mu_generator());
    j["omega"] = to_string(ctx.omega());
    j["d"] = ctx.d();
    j["d_prime"] = ctx.d_prime();
    return j;
}

inline ojson report_header(const FieldCtx& ctx, const char* command, const RunConfig& cfg) {
    ojson config;
    config["command"] = command;
    config["e"] = cfg.e;
    if (cfg.alpha) config["alpha"] = *cfg.alpha;
    config["format"] = to_string(cfg.format);
    config["seed"] = cfg.seed;
    if (std::string(command) == "verify") config["suite"] = to_string(cfg.suite);
    ojson h;
    h["tool"] = kToolName;
    h["version"] = kToolVersion;
    h["config"] = std::move(config);
    h["context"] = context_summary(ctx);
    return h;
}

/// {"value": count, ...}; keys appear in ascending numeric order.
inline ojson histogram_json(const Histogram& h) {
    ojson o = ojson::object();
    for (const auto& [v, n] : h) o[std::to_string(v)] = n;
    return o;
}

inline Histogram histogram_from_json(const ojson& o) {
    Histogram h;
    for (const auto& [key, n] : o.items()) h[std::stoll(key)] = n.get<std::uint64_t>();
    return h;
}

/// "value:count;value:count", ascending by value.
inline std::string histogram_csv(const Histogram& h) {
    std::string s;
    for (const auto& [v, n] : h) {
        if (!s.empty()) s += ';';
        s += std::to_string(v) + ':' + std::to_string(n);
    }
    return s;
}

inline Histogram histogram_from_csv(const std::string& s) {
    Histogram h;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("bad histogram entry '" + item + "'");
        h[std::stoll(item.substr(0, colon))] = std::stoull(item.substr(colon + 1));
    }
    return h;
}

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// -- spectrum ---------------------------------------------------------------------

inline CommandResult cmd_spectrum(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    const Elem alpha = parse_alpha(ctx, cfg.alpha);
    const Spectrum s = walsh_full(ctx, f_alpha_table(ctx, alpha));
    const bool bent = is_bent(s);
    if (cfg.format == Format::Csv) {
        std::string out = "e,alpha,bent,section,value,count\n";
        const auto rows = [&](const char* section, const Histogram& h) {
            for (const auto& [v, n] : h)
                out += std::to_string(cfg.e) + ',' + to_string(alpha) + ',' + (bent ? "true" : "false") + ',' +
                       section + ',' + std::to_string(v) + ',' + std::to_string(n) + '\n';
        };
        rows("all", s.histogram);
        rows("inner", s.inner);
        rows("outer", s.outer);
        return {out, 0};
    }
    ojson j;
    j["header"] = report_header(ctx, "spectrum", cfg);
    j["e"] = cfg.e;
    j["alpha"] = to_string(alpha);
    j["cube"] = ctx.is_cube(alpha);
    j["bent"] = bent;
    j["histogram"] = histogram_json(s.histogram);
    j["inner"] = histogram_json(s.inner);
    j["outer"] = histogram_json(s.outer);
    return {dump(j), 0};
}

// -- sweep ------------------------------------------------------------------------

struct SweepRecord {
    Elem alpha;
    bool cube = false;
    bool bent = false;
    bool matches = false;
    Histogram histogram;
    Histogram inner;
    Histogram outer;
};

/// Spectrum of every f_alpha, alpha in GF(q)^*, in increasing encoding.
inline std::vector<SweepRecord> sweep_records(const FieldCtx& ctx, unsigned workers) {
    const SigmaTable sig = sigma_inverse_table(ctx);
    const auto gram = trace_gram_matrix(ctx);
    std::vector<SweepRecord> recs(ctx.q() - 1);
    parallel_for(recs.size(), workers, [&](std::size_t i) {
        SweepRecord& r = recs[i];
        r.alpha = Elem{static_cast<std::uint32_t>(i + 1)};
        r.cube = ctx.is_cube(r.alpha);
        Spectrum s = walsh_full(ctx, f_alpha_table(ctx, sig, r.alpha), gram);
        r.bent = is_bent(s);
        r.matches = s.histogram == predicted_distribution(ctx.e(), r.cube) &&
                    support(s.inner) == predicted_inner_values(ctx.e(), r.cube) &&
                    support(s.outer) == predicted_outer_values(ctx.e(), r.cube);
        r.histogram = std::move(s.histogram);
        r.inner = std::move(s.inner);
        r.outer = std::move(s.outer);
    });
    return recs;
}

inline CommandResult cmd_sweep(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    const auto recs = sweep_records(ctx, effective_workers(cfg));
    std::uint64_t cubes = 0, matching = 0;
    for (const auto& r : recs) {
        cubes += r.cube;
        matching += r.matches;
    }
    const int code = matching == recs.size() ? 0 : 1;
    if (cfg.format == Format::Csv) {
        std::string out = "alpha,cube,bent,matches_prediction,histogram,inner,outer\n";
        for (const auto& r : recs)
            out += to_string(r.alpha) + ',' + (r.cube ? "true" : "false") + ',' + (r.bent ? "true" : "false") + ',' +
                   (r.matches ? "true" : "false") + ',' + histogram_csv(r.histogram) + ',' + histogram_csv(r.inner) +
                   ',' + histogram_csv(r.outer) + '\n';
        return {out, code};
    }
    ojson j;
    j["header"] = report_header(ctx, "sweep", cfg);
    ojson records = ojson::array();
    for (const auto& r : recs) {
        ojson o;
        o["alpha"] = to_string(r.alpha);
        o["cube"] = r.cube;
        o["bent"] = r.bent;
        o["matches_prediction"] = r.matches;
        o["histogram"] = histogram_json(r.histogram);
        o["inner"] = histogram_json(r.inner);
        o["outer"] = histogram_json(r.outer);
        records.push_back(std::move(o));
    }
    j["records"] = std::move(records);
    ojson summary;
    summary["records"] = recs.size();
    summary["cube"] = cubes;
    summary["noncube"] = recs.size() - cubes;
    summary["matching_prediction"] = matching;
    j["summary"] = std::move(summary);
    return {dump(j), code};
}

// -- verify -----------------------------------------------------------------------

inline CommandResult cmd_verify(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    VerifyOptions opt;
    opt.suite = cfg.suite;
    opt.seed = cfg.seed;
    opt.workers = effective_workers(cfg);
    const auto checks = run_verification(ctx, opt);
    int code = 0;
    for (const auto& c : checks)
        if (!c.passed) code = 1;
    if (cfg.format == Format::Csv) {
        std::string out = "lemma_id,status,checked,counterexample\n";
        for (const auto& c : checks)
            out += c.id + ',' + (c.passed ? "pass" : "fail") + ',' + std::to_string(c.checked) + ",\"" +
                   c.counterexample.value_or("") + "\"\n";
        return {out, code};
    }
    ojson a = ojson::array();
    for (const auto& c : checks) {
        ojson o;
        o["lemma_id"] = c.id;
        o["status"] = c.passed ? "pass" : "fail";
        o["checked"] = c.checked;
        if (c.counterexample) o["counterexample"] = *c.counterexample;
        a.push_back(std::move(o));
    }
    return {dump(a), code};
}

// -- inverse / truth-table ----------------------------------------------------------

inline CommandResult cmd_inverse(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    const SigmaTable sig = sigma_inverse_table(ctx);
    if (cfg.format == Format::Csv) {
        std::string out = "x,sigma,sigma_inv\n";
        for (std::uint32_t k = 0; k < ctx.q2(); ++k)
            out += to_string(ctx.decode(k)) + ',' + to_string(sig.forward[k]) + ',' + to_string(sig.backward[k]) + '\n';
        return {out, 0};
    }
    ojson j;
    j["header"] = report_header(ctx, "inverse", cfg);
    ojson rows = ojson::array();
    for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
        ojson o;
        o["x"] = to_string(ctx.decode(k));
        o["sigma"] = to_string(sig.forward[k]);
        o["sigma_inv"] = to_string(sig.backward[k]);
        rows.push_back(std::move(o));
    }
    j["records"] = std::move(rows);
    return {dump(j), 0};
}

/// Byte i carries entries 8i..8i+7 (entry 8i in the least significant bit);
/// bytes are printed in order as two lowercase hex digits each.
inline std::string truth_table_hex(const TruthTable& tt) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    const std::size_t bytes = (tt.size() + 7) / 8;
    out.reserve(2 * bytes);
    for (std::size_t i = 0; i < bytes; ++i) {
        const auto byte = static_cast<unsigned>((tt.words()[i / 8] >> (8 * (i % 8))) & 0xFFU);
        out += digits[byte >> 4];
        out += digits[byte & 0xF];
    }
    return out;
}

inline CommandResult cmd_truth_table(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    const Elem alpha = parse_alpha(ctx, cfg.alpha);
    return {truth_table_hex(f_alpha_table(ctx, alpha)) + "\n", 0};
}

// -- table ------------------------------------------------------------------------

struct TableRow {
    Branch branch;
    std::int64_t value = 0;
    std::uint64_t predicted = 0;
    std::uint64_t computed = 0;  // multiplicity for the smallest alpha of the branch
    std::uint64_t alphas = 0;    // alphas in the branch
    std::uint64_t agreeing = 0;  // alphas whose multiplicity equals the prediction
};

/// Predicted and computed multiplicities side by side, per branch and value.
inline std::vector<TableRow> multiplicity_table(const FieldCtx& ctx, unsigned workers) {
    const auto recs = sweep_records(ctx, workers);
    std::vector<TableRow> rows;
    for (const Branch b : {Branch::Noncube, Branch::Cube}) {
        const bool cube = b == Branch::Cube;
        Histogram predicted = predicted_distribution(ctx.e(), cube);
        for (const auto& r : recs)
            if (r.cube == cube)
                for (const auto& [v, n] : r.histogram) predicted.try_emplace(v, 0);
        for (const auto& [v, want] : predicted) {
            TableRow row{b, v, want, 0, 0, 0};
            bool first = true;
            for (const auto& r : recs) {
                if (r.cube != cube) continue;
                const std::uint64_t got = r.histogram.count(v) ? r.histogram.at(v) : 0;
                if (first) row.computed = got;
                first = false;
                ++row.alphas;
                row.agreeing += got == want;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

inline CommandResult cmd_table(const RunConfig& cfg) {
    const FieldCtx ctx(cfg.e);
    const auto rows = multiplicity_table(ctx, effective_workers(cfg));
    int code = 0;
    for (const auto& r : rows)
        if (r.agreeing != r.alphas) code = 1;
    if (cfg.format == Format::Csv) {
        std::string out = "branch,value,predicted,computed,alphas,agreeing\n";
        for (const auto& r : rows)
            out += std::string(to_string(r.branch)) + ',' + std::to_string(r.value) + ',' + std::to_string(r.predicted) +
                   ',' + std::to_string(r.computed) + ',' + std::to_string(r.alphas) + ',' + std::to_string(r.agreeing) +
                   '\n';
        return {out, code};
    }
    ojson j;
    j["header"] = report_header(ctx, "table", cfg);
    ojson a = ojson::array();
    for (const auto& r : rows) {
        ojson o;
        o["branch"] = to_string(r.branch);
        o["value"] = r.value;
        o["predicted"] = r.predicted;
        o["computed"] = r.computed;
        o["alphas"] = r.alphas;
        o["agreeing"] = r.agreeing;
        a.push_back(std::move(o));
    }
    j["records"] = std::move(a);
    ojson summary;
    summary["rows"] = rows.size();
    summary["all_agree"] = code == 0;
    j["summary"] = std::move(summary);
    return {dump(j), code};
}

}  // namespace permwalsh
