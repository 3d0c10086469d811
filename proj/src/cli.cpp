#include "secretary/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <string>
#include <system_error>

#include "secretary/asymptotics.hpp"
#include "secretary/error.hpp"
#include "secretary/mallows.hpp"
#include "secretary/montecarlo.hpp"
#include "secretary/policy.hpp"

namespace secretary::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::size_t n = 0;
    std::size_t m = 0;
    double q = 1.0;
    double c = 0.0;
    double alpha = 0.0;
    std::string regime;
    std::uint64_t samples = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string variable;
    std::vector<double> values;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;
    std::string format = "csv";
};

Json record() { return Json{{"schema", kSchemaVersion}}; }

// Shortest representation that parses back to the same double.
std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_cell(const Json& v)
{
    if (v.is_null())
        return "";
    if (v.is_number_float())
        return format_number(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::uint64_t default_seed()
{
    const char* env = std::getenv(kSeedEnvVar);
    if (env == nullptr || *env == '\0')
        return 0;
    std::uint64_t seed = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc{} || ptr != end)
        throw DomainError(std::string(kSeedEnvVar) + " must be a decimal 64-bit integer, got '" + env + "'");
    return seed;
}

std::size_t as_count(double v, const char* name)
{
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
        throw DomainError(std::string(name) + " grid values must be nonnegative integers, got " + format_number(v));
    return static_cast<std::size_t>(v);
}

RegimeSpec regime_from(const Options& o, const CLI::App& cmd)
{
    const Regime kind = parse_regime(o.regime);
    const auto need = [&](const char* flag) {
        if (cmd.count(flag) == 0)
            throw DomainError(std::string("regime ") + std::string(to_string(kind)) + " requires " + flag);
    };
    switch (kind) {
    case Regime::weak: need("--c"); return RegimeSpec::weak(o.c);
    case Regime::moderate: need("--c"); need("--alpha"); return RegimeSpec::moderate(o.c, o.alpha);
    case Regime::strong: need("--q"); return RegimeSpec::strong(o.q);
    }
    throw DomainError("unknown regime");
}

Json exact_record(std::size_t n, std::size_t m, double q)
{
    Json r = record();
    r["n"] = n;
    r["m"] = m;
    r["q"] = q;
    r["probability"] = success_probability(n, m, q).value;
    return r;
}

Json optimal_record(std::size_t n, double q)
{
    const auto best = optimal_threshold(n, q);
    Json r = record();
    r["n"] = n;
    r["q"] = q;
    r["m_star"] = best.m_star;
    r["p_star"] = best.p_star.value;
    return r;
}

Json predict_record(const RegimeSpec& spec, std::size_t n)
{
    const auto p = predict(spec, n);
    Json r = record();
    r["regime"] = std::string(to_string(spec.kind()));
    r["n"] = n;
    if (spec.c())
        r["c"] = *spec.c();
    if (spec.alpha())
        r["alpha"] = *spec.alpha();
    r["q"] = spec.q_at(n);
    r["m_star"] = p.m_star;
    r["p_limit"] = p.p_limit;
    return r;
}

std::vector<double> sweep_grid(const Options& o, const CLI::App& cmd)
{
    const bool explicit_values = cmd.count("--values") > 0;
    const bool range = cmd.count("--start") + cmd.count("--stop") + cmd.count("--steps") > 0;
    if (explicit_values && range)
        throw DomainError("give either --values or --start/--stop/--steps, not both");
    if (explicit_values)
        return o.values;
    if (range) {
        if (cmd.count("--start") == 0 || cmd.count("--stop") == 0 || cmd.count("--steps") == 0)
            throw DomainError("a range grid needs --start, --stop and --steps");
        if (o.steps < 1)
            throw DomainError("--steps must be at least 1");
        std::vector<double> grid(o.steps);
        for (std::size_t i = 0; i < o.steps; ++i)
            grid[i] = o.steps == 1 ? o.start
                                   : o.start + (o.stop - o.start) * static_cast<double>(i) /
                                                   static_cast<double>(o.steps - 1);
        return grid;
    }
    if (o.variable == "m") {
        std::vector<double> grid(o.n);
        for (std::size_t m = 0; m < o.n; ++m)
            grid[m] = static_cast<double>(m);
        return grid;
    }
    throw DomainError("sweep over " + o.variable + " needs --values or --start/--stop/--steps");
}

std::vector<Json> sweep_rows(const Options& o, const CLI::App& cmd)
{
    const auto need = [&](const char* flag) {
        if (cmd.count(flag) == 0)
            throw DomainError("sweep over " + o.variable + " requires " + flag);
    };
    const auto grid = sweep_grid(o, cmd);
    if (grid.empty())
        throw DomainError("sweep grid is empty");

    std::vector<Json> rows;
    rows.reserve(grid.size());
    if (o.variable == "m") {
        need("--n");
        need("--q");
        for (const double v : grid)
            rows.push_back(exact_record(o.n, as_count(v, "m"), o.q));
    } else if (o.variable == "q" || o.variable == "n") {
        need(o.variable == "q" ? "--n" : "--q");
        const bool fixed_m = cmd.count("--m") > 0;
        for (const double v : grid) {
            const std::size_t n = o.variable == "n" ? as_count(v, "n") : o.n;
            const double q = o.variable == "q" ? v : o.q;
            rows.push_back(fixed_m ? exact_record(n, o.m, q) : optimal_record(n, q));
        }
    } else if (o.variable == "c") {
        need("--n");
        need("--regime");
        const Regime kind = parse_regime(o.regime);
        if (kind == Regime::strong)
            throw DomainError("sweep over c needs --regime weak or moderate");
        if (kind == Regime::moderate)
            need("--alpha");
        for (const double c : grid) {
            const auto spec = kind == Regime::weak ? RegimeSpec::weak(c) : RegimeSpec::moderate(c, o.alpha);
            const double q = spec.q_at(o.n);
            const auto best = optimal_threshold(o.n, q);
            const auto prediction = predict(spec, o.n);
            Json r = record();
            r["regime"] = std::string(to_string(kind));
            r["n"] = o.n;
            r["c"] = c;
            r["alpha"] = spec.alpha() ? Json(*spec.alpha()) : Json(nullptr);
            r["q"] = q;
            r["m_star"] = best.m_star;
            r["p_star"] = best.p_star.value;
            r["m_star_predicted"] = prediction.m_star;
            r["p_limit"] = prediction.p_limit;
            rows.push_back(std::move(r));
        }
    } else {
        throw DomainError("unknown sweep variable '" + o.variable + "' (expected m, q, n or c)");
    }
    return rows;
}

void write_csv(const std::vector<Json>& rows, std::ostream& out)
{
    std::vector<std::string> columns;
    for (const auto& [key, value] : rows.front().items())
        if (key != "schema")
            columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[columns[i]]);
        out << '\n';
    }
}

// One line, "error: <kind>: <message>".
void report(std::ostream& err, const char* kind, const std::string& message)
{
    std::string line = message;
    for (auto& ch : line)
        if (ch == '\n')
            ch = ' ';
    err << "error: " << kind << ": " << line << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Secretary problem under Mallows-biased arrival order: exact and asymptotic success "
                 "probabilities of threshold strategies, optimal thresholds, and simulation.",
                 "secretary"};
    app.require_subcommand(1);
    Options o;

    auto* exact = app.add_subcommand("exact", "Success probability of S(n, m) under Mallows(q); q = 1 is the uniform case");
    exact->add_option("--n", o.n, "number of items")->required();
    exact->add_option("--m", o.m, "number of initially rejected items, 0 <= m <= n-1")->required();
    exact->add_option("--q", o.q, "Mallows parameter in (0, 1]")->required();

    auto* optimal = app.add_subcommand("optimal", "Best threshold m* within S(n, .) and its probability; q = 1 is the uniform case");
    optimal->add_option("--n", o.n, "number of items")->required();
    optimal->add_option("--q", o.q, "Mallows parameter in (0, 1]")->required();

    auto* predict_cmd = app.add_subcommand("predict", "Asymptotic optimal threshold and limiting success probability");
    predict_cmd->add_option("--regime", o.regime, "weak (q = 1 - c/n), moderate (q = 1 - c/n^alpha) or strong (fixed q)")
        ->required();
    predict_cmd->add_option("--n", o.n, "number of items")->required();
    predict_cmd->add_option("--c", o.c, "bias constant c > 0 (weak, moderate)");
    predict_cmd->add_option("--alpha", o.alpha, "exponent in (0, 1) (moderate)");
    predict_cmd->add_option("--q", o.q, "Mallows parameter in (0, 1) (strong)");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the success probability of S(n, m)");
    simulate->add_option("--n", o.n, "number of items")->required();
    simulate->add_option("--m", o.m, "number of initially rejected items")->required();
    simulate->add_option("--q", o.q, "Mallows parameter in (0, 1]")->required();
    simulate->add_option("--samples", o.samples, "number of simulated arrival orders")->required();
    simulate->add_option("--seed", o.seed, "base seed (default: $SECRETARY_SEED, else 0)");
    simulate->add_option("--workers", o.workers, "worker threads; worker k uses splitmix64(seed + k)")
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Tabulate exact or optimal results over a parameter grid");
    sweep->add_option("--variable", o.variable, "swept parameter: m, q, n or c")->required();
    sweep->add_option("--values", o.values, "explicit grid, comma separated")->delimiter(',');
    sweep->add_option("--start", o.start, "first grid point");
    sweep->add_option("--stop", o.stop, "last grid point");
    sweep->add_option("--steps", o.steps, "number of evenly spaced grid points");
    sweep->add_option("--n", o.n, "number of items");
    sweep->add_option("--m", o.m, "fixed threshold (q and n sweeps; omit to report the optimum)");
    sweep->add_option("--q", o.q, "Mallows parameter in (0, 1]");
    sweep->add_option("--regime", o.regime, "weak or moderate (c sweeps)");
    sweep->add_option("--alpha", o.alpha, "exponent in (0, 1) (moderate c sweeps)");
    sweep->add_option("--format", o.format, "csv or json")->capture_default_str();

    auto* sample_cmd = app.add_subcommand("sample", "Draw Mallows(q) permutations, one per line, ranks in arrival order");
    sample_cmd->add_option("--n", o.n, "number of items")->required();
    sample_cmd->add_option("--q", o.q, "Mallows parameter in (0, 1]")->required();
    sample_cmd->add_option("--count", o.count, "number of permutations")->capture_default_str();
    sample_cmd->add_option("--seed", o.seed, "seed (default: $SECRETARY_SEED, else 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report(err, "usage", e.what());
        return kExitDomainError;
    }

    try {
        if (exact->parsed()) {
            out << exact_record(o.n, o.m, o.q).dump() << '\n';
        } else if (optimal->parsed()) {
            out << optimal_record(o.n, o.q).dump() << '\n';
        } else if (predict_cmd->parsed()) {
            out << predict_record(regime_from(o, *predict_cmd), o.n).dump() << '\n';
        } else if (simulate->parsed()) {
            const std::uint64_t seed = simulate->count("--seed") ? o.seed : default_seed();
            const auto exact_value = success_probability(o.n, o.m, o.q).value;
            const auto est = estimate_success(o.n, o.m, o.q, o.samples, seed, o.workers);
            Json r = record();
            r["n"] = o.n;
            r["m"] = o.m;
            r["q"] = o.q;
            r["estimate"] = est.estimate;
            r["std_error"] = est.std_error;
            r["samples"] = est.samples;
            r["seed"] = est.base_seed;
            r["workers"] = est.workers;
            r["probability"] = exact_value;
            out << r.dump() << '\n';
        } else if (sweep->parsed()) {
            if (o.format != "csv" && o.format != "json")
                throw DomainError("--format must be csv or json");
            const auto rows = sweep_rows(o, *sweep);
            if (o.format == "csv")
                write_csv(rows, out);
            else
                out << Json(rows).dump() << '\n';
        } else if (sample_cmd->parsed()) {
            const std::uint64_t seed = sample_cmd->count("--seed") ? o.seed : default_seed();
            const MallowsModel model(o.n, o.q);
            Rng rng(seed);
            for (std::uint64_t i = 0; i < o.count; ++i)
                out << sample(model, rng).to_string() << '\n';
        }
    } catch (const DomainError& e) {
        report(err, "domain", e.what());
        return kExitDomainError;
    } catch (const std::exception& e) {
        report(err, "internal", e.what());
        return kExitInternalError;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("secretary");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace secretary::cli
