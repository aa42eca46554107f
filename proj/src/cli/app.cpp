#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hankel/cli.hpp"
#include "hankel/errors.hpp"

namespace hankel::cli {

namespace {

struct Globals {
    std::string field = "2";
    std::uint64_t cap = kDefaultCap;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string output;
    bool timing = false;

    EngineOptions engine() const { return {cap, jobs}; }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("--format must be json, csv or text");
}

std::uint64_t default_cap() {
    const char* env = std::getenv("HANKEL_CENSUS_CAP");
    if (!env || !*env) {
        return kDefaultCap;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
        throw UsageError("HANKEL_CENSUS_CAP must be a positive integer");
    }
    return v;
}

std::string prefix_param(const SeqTuple& a) { return "(" + a.to_string() + ")"; }

const char* range_name(QueryRange r) {
    switch (r) {
        case QueryRange::Bounded: return "bounded";
        case QueryRange::SquarePlusOne: return "square-plus-one";
        case QueryRange::Outside: return "outside";
    }
    return "?";
}

int exit_for(Verdict v) { return v == Verdict::Mismatch ? kMismatch : kOk; }

Json header(const char* command, const Field& f, const ParamList& params) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["field"] = field_json(f);
    j["command"] = command;
    j["params"] = params_json(params);
    return j;
}

// Shared emitter for count, jt and sample.
void emit_single(std::ostream& os, Format format, const char* command, const CensusReport& r,
                 const Json& extra, bool timing) {
    const std::string observed =
        r.estimate ? fmt("%.6f", r.estimate->estimate) : (r.observed ? r.observed->str() : "");
    const std::string formula = r.formula ? r.formula->str() : "";
    switch (format) {
        case Format::Json: {
            Json j = header(command, r.field, r.params);
            j["mode"] = to_string(r.mode);
            j["formula"] = r.formula ? Json(formula) : Json(nullptr);
            if (r.estimate) {
                j["observed"] = estimate_json(*r.estimate);
            } else {
                j["observed"] = r.observed ? Json(observed) : Json(nullptr);
            }
            j["verdict"] = to_string(r.verdict);
            for (const auto& [k, v] : extra.items()) {
                j[k] = v;
            }
            if (!r.note.empty()) {
                j["note"] = r.note;
            }
            if (timing) {
                j["elapsed_ms"] = r.elapsed_ms;
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << "command,field,params,mode,formula,observed,verdict";
            if (timing) os << ",elapsed_ms";
            os << '\n'
               << command << ',' << csv_escape(r.field.spec_string()) << ','
               << csv_escape(params_text(r.params)) << ',' << to_string(r.mode) << ',' << formula
               << ',' << observed << ',' << to_string(r.verdict);
            if (timing) os << ',' << fmt("%.3f", r.elapsed_ms);
            os << '\n';
            break;
        case Format::Text:
            os << command << "  field " << r.field.spec_string() << "  " << params_text(r.params)
               << '\n';
            for (const auto& [k, v] : extra.items()) {
                os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
            if (r.formula) os << "  formula:  " << formula << '\n';
            if (r.estimate) {
                const McEstimate& e = *r.estimate;
                os << "  estimate: " << fmt("%.6f", e.estimate) << " (" << e.hits << "/" << e.trials
                   << ")\n  stderr:   " << fmt("%.6f", e.stderr_) << '\n';
                if (e.target) {
                    os << "  target:   " << fmt("%.6f", *e.target) << "\n  z:        "
                       << fmt("%.3f", e.z_score().value_or(0.0)) << '\n';
                }
            } else if (r.observed) {
                os << "  observed: " << observed << '\n';
            }
            os << "  verdict:  " << to_string(r.verdict) << '\n';
            if (!r.note.empty()) os << "  note:     " << r.note << '\n';
            if (timing) os << "  elapsed:  " << fmt("%.3f", r.elapsed_ms) << " ms\n";
            break;
    }
}

// rank ------------------------------------------------------------------------

struct RankArgs {
    int m = 0;
    int n = 0;
    std::string x;
};

int cmd_rank(const Globals& g, const RankArgs& a, std::ostream& os) {
    const Field f = Field::parse(g.field);
    const SeqTuple x = SeqTuple::parse(f, a.x);
    if (a.m < -1 || a.n < -1 || x.size() != static_cast<std::size_t>(a.m + a.n + 1)) {
        throw UsageError("rank needs exactly m+n+1 = " + std::to_string(a.m + a.n + 1) +
                         " entries, got " + std::to_string(x.size()));
    }
    const auto [rank, reduced] = rank_via_reduction(x, a.m, a.n);
    const ParamList params{{"m", std::to_string(a.m)}, {"n", std::to_string(a.n)},
                           {"x", prefix_param(x)}};
    switch (parse_format(g.format)) {
        case Format::Json: {
            Json j = header("rank", f, params);
            j["rank"] = rank;
            j["reduced_shape"] = {{"rdeg", reduced.rdeg}, {"cdeg", reduced.cdeg}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << "m,n,rank,reduced_rdeg,reduced_cdeg\n"
               << a.m << ',' << a.n << ',' << rank << ',' << reduced.rdeg << ',' << reduced.cdeg
               << '\n';
            break;
        case Format::Text:
            os << rank << '\n'
               << "reduced shape: H_{" << reduced.rdeg << "," << reduced.cdeg << "}\n";
            break;
    }
    return kOk;
}

// count / sample ----------------------------------------------------------------

struct CountArgs {
    int m = 0;
    int n = 0;
    int r = 0;
    std::string prefix;
    std::string mode = "both";
    std::uint64_t trials = 1'000'000;
};

ParamList query_params(const CountQuery& q) {
    return {{"m", std::to_string(q.m())},
            {"n", std::to_string(q.n())},
            {"r", std::to_string(q.r())},
            {"k", std::to_string(q.k())},
            {"prefix", prefix_param(q.prefix())}};
}

int run_monte_carlo(const Globals& g, const CountQuery& q, std::uint64_t trials,
                    const char* command, std::ostream& os) {
    const auto t0 = Clock::now();
    CensusReport r{command, "rank-at-most", q.field(), query_params(q)};
    r.params.emplace_back("trials", std::to_string(trials));
    r.params.emplace_back("seed", std::to_string(g.seed));
    r.mode = Mode::MonteCarlo;
    r.estimate = monte_carlo_rank_le(q, trials, g.seed, g.jobs);
    if (!r.estimate->target) {
        r.verdict = Verdict::Unverified;
        r.note = "no closed form claimed outside k <= r <= m, r <= n and k <= r = m = n + 1";
    } else {
        r.verdict = r.estimate->within(kMonteCarloSigmas) ? Verdict::Estimate : Verdict::Mismatch;
    }
    r.elapsed_ms = ms_since(t0);
    Json extra;
    extra["range"] = range_name(q.range());
    extra["sigmas"] = kMonteCarloSigmas;
    emit_single(os, parse_format(g.format), command, r, extra, g.timing);
    return exit_for(r.verdict);
}

int cmd_count(const Globals& g, const CountArgs& a, std::ostream& os) {
    const Field f = Field::parse(g.field);
    const CountQuery q(a.m, a.n, a.r, SeqTuple::parse(f, a.prefix));
    if (a.mode == "mc") {
        return run_monte_carlo(g, q, a.trials, "count", os);
    }
    Mode mode;
    if (a.mode == "formula") {
        mode = Mode::Formula;
    } else if (a.mode == "brute") {
        mode = Mode::Brute;
    } else if (a.mode == "both") {
        mode = Mode::Both;
    } else {
        throw UsageError("--mode must be formula, brute, both or mc");
    }
    const auto t0 = Clock::now();
    CensusReport r{"count", "rank-at-most", f, query_params(q)};
    r.mode = mode;
    if (mode != Mode::Brute) {
        if (q.range() != QueryRange::Outside) {
            r.formula = count_rank_le_formula(q);
        } else if (mode == Mode::Formula) {
            count_rank_le_formula(q);  // throws the usage error
        } else {
            r.note = "no closed form claimed outside k <= r <= m, r <= n and k <= r = m = n + 1";
        }
    }
    if (mode != Mode::Formula) {
        r.observed = brute_count_rank_le(q, g.engine());
    }
    r.verdict = compare(r.formula, r.observed);
    r.elapsed_ms = ms_since(t0);
    Json extra;
    extra["range"] = range_name(q.range());
    emit_single(os, parse_format(g.format), "count", r, extra, g.timing);
    return exit_for(r.verdict);
}

int cmd_sample(const Globals& g, const CountArgs& a, std::ostream& os) {
    const Field f = Field::parse(g.field);
    const CountQuery q(a.m, a.n, a.r, SeqTuple::parse(f, a.prefix));
    return run_monte_carlo(g, q, a.trials, "sample", os);
}

// census ----------------------------------------------------------------------

int cmd_census(const Globals& g, const CountArgs& a, std::ostream& os) {
    const Field f = Field::parse(g.field);
    const SeqTuple prefix = SeqTuple::parse(f, a.prefix);
    const auto t0 = Clock::now();
    const RankDistribution dist = brute_census(f, a.m, a.n, prefix, g.engine());
    const double elapsed = ms_since(t0);
    const int k = static_cast<int>(prefix.size());
    // The rank-exact closed form covers unrestricted tuples; rank is
    // transpose invariant, so m > n is handled by swapping.
    const bool has_formula = k == 0;
    const int lo = std::min(a.m, a.n);
    const int hi = std::max(a.m, a.n);
    const Count total_formula = count_pow(f.order(), static_cast<std::uint64_t>(a.m + a.n + 1 - k));
    Verdict verdict = dist.total == total_formula ? Verdict::Match : Verdict::Mismatch;
    std::vector<std::optional<Count>> formulas;
    for (const auto& [rho, c] : dist.counts) {
        std::optional<Count> fv;
        if (has_formula) {
            fv = count_rank_eq_formula(f, lo, hi, static_cast<int>(rho));
            if (*fv != c) {
                verdict = Verdict::Mismatch;
            }
        }
        formulas.push_back(fv);
    }
    if (!has_formula && verdict == Verdict::Match) {
        verdict = Verdict::Unverified;
    }
    const ParamList params{{"m", std::to_string(a.m)},
                           {"n", std::to_string(a.n)},
                           {"k", std::to_string(k)},
                           {"prefix", prefix_param(prefix)}};
    switch (parse_format(g.format)) {
        case Format::Json: {
            Json j = header("census", f, params);
            Json rows = Json::array();
            std::size_t i = 0;
            for (const auto& [rho, c] : dist.counts) {
                Json row;
                row["rank"] = rho;
                row["count"] = c.str();
                row["formula"] = formulas[i] ? Json(formulas[i]->str()) : Json(nullptr);
                rows.push_back(row);
                ++i;
            }
            j["distribution"] = rows;
            j["total"] = dist.total.str();
            j["total_formula"] = total_formula.str();
            j["verdict"] = to_string(verdict);
            if (g.timing) {
                j["elapsed_ms"] = elapsed;
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << "rank,count\n";
            for (const auto& [rho, c] : dist.counts) {
                os << rho << ',' << c.str() << '\n';
            }
            break;
        case Format::Text: {
            os << "census  field " << f.spec_string() << "  " << params_text(params) << '\n';
            std::size_t i = 0;
            for (const auto& [rho, c] : dist.counts) {
                os << "  rank " << rho << ": " << c.str();
                if (formulas[i]) {
                    os << "  (formula " << formulas[i]->str() << ")";
                }
                os << '\n';
                ++i;
            }
            os << "  total:   " << dist.total.str() << "  (expected " << total_formula.str() << ")\n"
               << "  verdict: " << to_string(verdict) << '\n';
            if (g.timing) os << "  elapsed: " << fmt("%.3f", elapsed) << " ms\n";
            break;
        }
    }
    return exit_for(verdict);
}

// jt --------------------------------------------------------------------------

struct JtArgs {
    int u = 1;
    int v = 1;
    std::string mode = "both";
    bool show_flip = false;
};

std::vector<std::string> flip_pattern(int u, int v) {
    std::vector<std::string> out;
    for (int t = 0; t <= 2 * v - 2; ++t) {
        const int i = u - v + 1 + t;
        out.push_back(i < 0 ? "0" : i == 0 ? "1" : "y" + std::to_string(i));
    }
    return out;
}

int cmd_jt(const Globals& g, const JtArgs& a, std::ostream& os) {
    const Field f = Field::parse(g.field);
    if (a.u < 1 || a.v < 1) {
        count_jt_singular_formula(f, a.u, a.v);  // throws with the explanation
    }
    const auto t0 = Clock::now();
    CensusReport r{"jt", "jt-singular", f, {{"u", std::to_string(a.u)}, {"v", std::to_string(a.v)}}};
    if (a.mode == "formula") {
        r.mode = Mode::Formula;
    } else if (a.mode == "brute") {
        r.mode = Mode::Brute;
    } else if (a.mode == "both") {
        r.mode = Mode::Both;
    } else {
        throw UsageError("--mode must be formula, brute or both");
    }
    if (r.mode != Mode::Brute) {
        r.formula = count_jt_singular_formula(f, a.u, a.v);
    }
    if (r.mode != Mode::Formula) {
        r.observed = brute_count_jt_singular(f, a.u, a.v, g.engine(), JtPath::Flip);
    }
    r.verdict = compare(r.formula, r.observed);
    r.elapsed_ms = ms_since(t0);
    Json extra = Json::object();
    if (a.show_flip) {
        std::string pattern;
        for (const auto& s : flip_pattern(a.u, a.v)) {
            pattern += (pattern.empty() ? "" : ",") + s;
        }
        extra["hankel_tuple"] = "(" + pattern + ")";
        extra["hankel_shape"] = "H_{" + std::to_string(a.v - 1) + "," + std::to_string(a.v - 1) + "}";
        extra["det_sign"] = jt_flip_sign(a.v);
    }
    emit_single(os, parse_format(g.format), "jt", r, extra, g.timing);
    return exit_for(r.verdict);
}

// verify ----------------------------------------------------------------------

struct VerifyArgs {
    std::string suites = "all";
    std::optional<int> max_n;
};

std::vector<Suite> parse_suites(const std::string& text) {
    if (text == "all") {
        return all_suites();
    }
    std::vector<Suite> out;
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto s = parse_suite(name);
        if (!s) {
            throw UsageError("unknown suite '" + name +
                             "' (lemmas, identities, witnesses, theorems, jt, all)");
        }
        out.push_back(*s);
    }
    return out;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, bool field_given, std::ostream& os,
               std::ostream& err) {
    VerifyOptions opts;
    opts.fields = parse_field_list(field_given ? g.field : "2,3");
    opts.suites = parse_suites(a.suites);
    opts.max_n = a.max_n;
    opts.engine = g.engine();
    const auto t0 = Clock::now();
    const std::vector<CensusReport> records = verify(opts);
    const double elapsed = ms_since(t0);

    std::size_t matches = 0, mismatches = 0, skipped = 0;
    const CensusReport* first_bad = nullptr;
    for (const auto& r : records) {
        if (r.verdict == Verdict::Mismatch) {
            ++mismatches;
            if (!first_bad) first_bad = &r;
        } else if (r.verdict == Verdict::Skipped) {
            ++skipped;
        } else {
            ++matches;
        }
    }
    const Verdict overall = mismatches ? Verdict::Mismatch : Verdict::Match;

    switch (parse_format(g.format)) {
        case Format::Json: {
            Json j;
            j["schema"] = kSchemaVersion;
            j["command"] = "verify";
            Json params;
            Json suites = Json::array();
            for (Suite s : opts.suites) suites.push_back(to_string(s));
            Json fields = Json::array();
            for (const Field& f : opts.fields) fields.push_back(field_json(f));
            params["suites"] = suites;
            params["fields"] = fields;
            params["max_n"] = a.max_n ? Json(*a.max_n) : Json(nullptr);
            j["params"] = params;
            Json recs = Json::array();
            for (const auto& r : records) recs.push_back(report_json(r, g.timing));
            j["records"] = recs;
            j["summary"] = {{"records", records.size()},
                            {"match", matches},
                            {"mismatch", mismatches},
                            {"skipped", skipped}};
            j["verdict"] = to_string(overall);
            if (g.timing) j["elapsed_ms"] = elapsed;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << "suite,family,field,params,formula,observed,instances,violations,verdict\n";
            for (const auto& r : records) {
                os << r.suite << ',' << r.family << ',' << csv_escape(r.field.spec_string()) << ','
                   << csv_escape(params_text(r.params)) << ','
                   << (r.formula ? r.formula->str() : "") << ','
                   << (r.observed ? r.observed->str() : "") << ',' << r.instances << ','
                   << r.violations << ',' << to_string(r.verdict) << '\n';
            }
            break;
        case Format::Text:
            for (const auto& r : records) {
                os << to_string(r.verdict) << "  " << r.suite << '/' << r.family << "  GF("
                   << r.field.spec_string() << ")  " << params_text(r.params) << "  instances="
                   << r.instances;
                if (r.formula) os << "  formula=" << r.formula->str();
                if (r.observed) os << "  observed=" << r.observed->str();
                if (r.violations) os << "  violations=" << r.violations;
                if (!r.note.empty()) os << "  (" << r.note << ")";
                os << '\n';
            }
            os << "summary: " << records.size() << " records, " << matches << " match, "
               << mismatches << " mismatch, " << skipped << " skipped\n";
            if (g.timing) os << "elapsed: " << fmt("%.3f", elapsed) << " ms\n";
            break;
    }
    if (first_bad) {
        err << "first failure: " << first_bad->suite << '/' << first_bad->family << " field "
            << first_bad->field.spec_string() << " " << params_text(first_bad->params) << ": "
            << first_bad->first_failure << '\n';
    }
    err << "verify: " << records.size() << " records in " << fmt("%.1f", elapsed) << " ms\n";
    return exit_for(overall);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rank counts for Hankel matrices over finite fields", "hankel-census"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    try {
        g.cap = default_cap();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    g.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* field_opt = app.add_option("--field", g.field, "Field: Q, or p^d:c0,...,cd")
                          ->capture_default_str();
    app.add_option("--cap", g.cap, "Maximum rank tests for an exhaustive job")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--format", g.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", g.output, "Write the report here instead of stdout");
    app.add_flag("--timing", g.timing, "Include elapsed time in reports");

    std::function<int(std::ostream&)> action;

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "Rank of H_{m,n}(x)");
    rank->add_option("--m", rank_args.m)->required();
    rank->add_option("--n", rank_args.n)->required();
    rank->add_option("x", rank_args.x, "Comma-separated entries x_0,...,x_{m+n}")->required();
    rank->callback([&] { action = [&](std::ostream& os) { return cmd_rank(g, rank_args, os); }; });

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count tuples with rank H_{m,n}(x) <= r");
    count->add_option("--m", count_args.m)->required();
    count->add_option("--n", count_args.n)->required();
    count->add_option("--r", count_args.r)->required();
    count->add_option("--prefix", count_args.prefix, "Fixed leading entries a_0,...,a_{k-1}");
    count->add_option("--mode", count_args.mode, "formula, brute, both or mc")
        ->check(CLI::IsMember({"formula", "brute", "both", "mc"}));
    count->add_option("--trials", count_args.trials, "Trials for --mode mc")
        ->check(CLI::PositiveNumber);
    count->callback([&] { action = [&](std::ostream& os) { return cmd_count(g, count_args, os); }; });

    CountArgs census_args;
    auto* census = app.add_subcommand("census", "Exact rank distribution of H_{m,n}(x)");
    census->add_option("--m", census_args.m)->required();
    census->add_option("--n", census_args.n)->required();
    census->add_option("--prefix", census_args.prefix, "Fixed leading entries");
    census->callback(
        [&] { action = [&](std::ostream& os) { return cmd_census(g, census_args, os); }; });

    JtArgs jt_args;
    auto* jt = app.add_subcommand("jt", "Singular Jacobi-Trudi matrices J_{u,v}(y)");
    jt->add_option("--u", jt_args.u)->required();
    jt->add_option("--v", jt_args.v)->required();
    jt->add_option("--mode", jt_args.mode, "formula, brute or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    jt->add_flag("--show-flip", jt_args.show_flip, "Show the Hankel tuple behind J_{u,v}");
    jt->callback([&] { action = [&](std::ostream& os) { return cmd_jt(g, jt_args, os); }; });

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->add_option("--suite", verify_args.suites,
                           "lemmas, identities, witnesses, theorems, jt or all (comma list)");
    verify_cmd->add_option("--max-n", verify_args.max_n, "Size bound per suite");
    verify_cmd->callback([&] {
        action = [&](std::ostream& os) {
            return cmd_verify(g, verify_args, field_opt->count() > 0, os, err);
        };
    });

    CountArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of P(rank H_{m,n}(x) <= r)");
    sample->add_option("--m", sample_args.m)->required();
    sample->add_option("--n", sample_args.n)->required();
    sample->add_option("--r", sample_args.r)->required();
    sample->add_option("--prefix", sample_args.prefix, "Fixed leading entries");
    sample->add_option("--trials", sample_args.trials)->check(CLI::PositiveNumber);
    sample->callback(
        [&] { action = [&](std::ostream& os) { return cmd_sample(g, sample_args, os); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (g.output.empty()) {
            return action(out);
        }
        std::ostringstream buffer;
        const int code = action(buffer);
        std::ofstream file(g.output, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write " << g.output << '\n';
            return kUsage;
        }
        return code;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\nrequired work: " << e.required_work()
            << "\nraise --cap (or HANKEL_CENSUS_CAP), or use --mode mc\n";
        return kResource;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hankel::cli
