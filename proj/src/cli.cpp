#include "fsind/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsind/indicators.hpp"
#include "fsind/root_system.hpp"
#include "fsind/torus_oracle.hpp"

namespace fsind::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(what + ": '" + s + "' is not an integer");
    }
}

IntVector parse_labels(const std::string& text, std::size_t rank) {
    if (text.empty()) throw ValidationError("--lambda is required (comma-separated Dynkin labels)");
    IntVector labels;
    for (const auto& part : split_csv(text)) {
        auto v = parse_int(part, "--lambda");
        if (v < 0) throw ValidationError("--lambda: Dynkin labels must be nonnegative integers");
        labels.push_back(v);
    }
    if (labels.size() != rank)
        throw ValidationError("--lambda: expected " + std::to_string(rank) + " labels (the rank), got " +
                              std::to_string(labels.size()));
    return labels;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t rank, const std::string& what) {
    std::vector<Rational> out;
    for (const auto& part : split_csv(text)) {
        Rational q;
        if (part.empty() || q.set_str(part, 10) != 0 || q.get_den() == 0)
            throw ValidationError(what + ": '" + part + "' is not a rational number");
        q.canonicalize();
        out.push_back(q);
    }
    if (out.size() != rank)
        throw ValidationError(what + ": expected " + std::to_string(rank) + " entries (the rank), got " +
                              std::to_string(out.size()));
    return out;
}

std::vector<std::size_t> parse_grid(const std::string& text, std::size_t rank) {
    std::vector<std::size_t> grid;
    for (const auto& part : split_csv(text)) {
        auto v = parse_int(part, "--grid");
        if (v < 1) throw ValidationError("--grid: sizes must be positive");
        grid.push_back(static_cast<std::size_t>(v));
    }
    if (grid.size() != rank)
        throw ValidationError("--grid: expected " + std::to_string(rank) + " sizes (the rank), got " +
                              std::to_string(grid.size()));
    return grid;
}

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
json big_json(const BigInt& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

std::string join(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct Context {
    RootSystem rs;
    std::optional<WeylGroup> weyl;

    const WeylGroup& group(std::size_t cap) {
        if (!weyl) weyl = WeylGroup::enumerate(rs, cap);
        return *weyl;
    }
};

class Report {
public:
    Report(const JobSpec& spec, const RootSystem& rs) : spec_(spec) {
        doc_["schema"] = kJsonSchema;
        doc_["command"] = spec.command;
        add("type", rs.lie_type().name());
        add("rank", rs.rank());
    }

    template <typename T>
    void add(const std::string& key, T&& value) {
        doc_[key] = json(std::forward<T>(value));
        text_.emplace_back(key, render(doc_[key]));
    }
    void add_text_only(const std::string& line) { extra_.push_back(line); }

    void write(std::ostream& out, Clock::time_point start) {
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (spec_.format == OutputFormat::Json) {
            doc_["elapsed_ms"] = ms;
            out << doc_.dump() << '\n';
            return;
        }
        for (const auto& [k, v] : text_) out << k << ": " << v << '\n';
        for (const auto& line : extra_) out << line << '\n';
        out << "elapsed_ms: " << std::fixed << std::setprecision(3) << ms << '\n';
    }

private:
    static std::string render(const json& j) {
        if (j.is_string()) return j.get<std::string>();
        if (j.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + render(j[i]);
            return s;
        }
        return j.dump();
    }

    const JobSpec& spec_;
    json doc_;
    std::vector<std::pair<std::string, std::string>> text_;
    std::vector<std::string> extra_;
};

int cmd_indicator(const JobSpec& spec, Context& ctx, std::ostream& out) {
    const auto start = Clock::now();
    if (!spec.m) throw ValidationError("--m is required");
    if (*spec.m < 2) throw ValidationError("--m must be >= 2");
    const IntVector labels = parse_labels(spec.lambda, ctx.rs.rank());
    const auto& w = ctx.group(spec.cap_weyl);
    const auto lambda = ctx.rs.from_dynkin_labels(labels);
    const BigInt nu = indicator(ctx.rs, w, lambda, *spec.m, spec.engine, spec.cap_support);

    Report report(spec, ctx.rs);
    report.add("lambda", labels);
    report.add("m", *spec.m);
    report.add("nu_m", big_json(nu));
    report.add("weyl_order", w.size());
    report.add("engine", engine_name(spec.engine));
    report.write(out, start);
    return kSuccess;
}

int cmd_profile(const JobSpec& spec, Context& ctx, std::ostream& out) {
    const auto start = Clock::now();
    if (!spec.m_max) throw ValidationError("--m-max is required");
    if (*spec.m_max < 2) throw ValidationError("--m-max must be >= 2");
    const IntVector labels = parse_labels(spec.lambda, ctx.rs.rank());
    const auto& w = ctx.group(spec.cap_weyl);
    const auto profile =
        indicator_profile(ctx.rs, w, ctx.rs.from_dynkin_labels(labels), *spec.m_max, spec.engine, spec.cap_support);

    Report report(spec, ctx.rs);
    report.add("lambda", labels);
    report.add("m_max", *spec.m_max);
    report.add("stabilization_bound", profile.stabilization_bound);
    report.add("dim_zero_weight", big_json(profile.stable_value));
    report.add("in_root_lattice", profile.in_root_lattice);
    report.add("weyl_order", w.size());
    json values = json::array();
    report.add_text_only("m\tnu_m");
    for (const auto& v : profile.values) {
        values.push_back({{"m", v.m}, {"nu_m", big_json(v.nu)}});
        report.add_text_only(std::to_string(v.m) + "\t" + v.nu.get_str());
    }
    // Values go into JSON only; the table above covers text mode.
    if (spec.format == OutputFormat::Json) report.add("values", values);
    report.write(out, start);
    return kSuccess;
}

int cmd_multiplicity(const JobSpec& spec, Context& ctx, std::ostream& out) {
    const auto start = Clock::now();
    const std::size_t rank = ctx.rs.rank();
    const IntVector labels = parse_labels(spec.lambda, rank);
    if (spec.mu.empty()) throw ValidationError("--mu is required");
    const auto entries = parse_rationals(spec.mu, rank, "--mu");

    Weight mu(rank);
    if (spec.mu_basis == "roots") {
        mu = Weight(entries);
    } else if (spec.mu_basis == "labels") {
        const auto& inv = ctx.rs.inverse_cartan();
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) mu[i] += inv[i][j] * entries[j];
    } else {
        throw ValidationError("--mu-basis must be 'labels' or 'roots'");
    }

    const auto& w = ctx.group(spec.cap_weyl);
    const auto lambda = ctx.rs.from_dynkin_labels(labels);
    BigInt mult;
    if (spec.engine == MultiplicityEngine::Kostant) {
        mult = multiplicity_kostant(ctx.rs, w, lambda, mu);
    } else {
        const auto table = weight_support(ctx.rs, w, lambda, MultiplicityEngine::Freudenthal, spec.cap_support);
        mult = multiplicity_at(ctx.rs, table, mu);
    }

    Report report(spec, ctx.rs);
    report.add("lambda", labels);
    std::vector<std::string> mu_text;
    for (const auto& q : entries) mu_text.push_back(q.get_str());
    report.add("mu", mu_text);
    report.add("mu_basis", spec.mu_basis);
    report.add("multiplicity", big_json(mult));
    report.add("engine", engine_name(spec.engine));
    report.write(out, start);
    return kSuccess;
}

int cmd_oracle(const JobSpec& spec, Context& ctx, std::ostream& out) {
    const auto start = Clock::now();
    if (!spec.m) throw ValidationError("--m is required");
    if (*spec.m < 2) throw ValidationError("--m must be >= 2");
    const IntVector labels = parse_labels(spec.lambda, ctx.rs.rank());
    if (ctx.rs.rank() > spec.cap_oracle_rank)
        throw ResourceError("torus oracle limited to rank <= " + std::to_string(spec.cap_oracle_rank));
    std::optional<std::vector<std::size_t>> grid;
    if (!spec.grid.empty()) grid = parse_grid(spec.grid, ctx.rs.rank());

    const auto& w = ctx.group(spec.cap_weyl);
    const auto lambda = ctx.rs.from_dynkin_labels(labels);
    const BigInt exact = indicator(ctx.rs, w, lambda, *spec.m, spec.engine, spec.cap_support);
    OracleOptions options;
    options.max_rank = spec.cap_oracle_rank;
    options.support_cap = spec.cap_support;
    const auto numeric = indicator_numeric(ctx.rs, w, lambda, *spec.m, grid, options);
    const double diff = std::fabs(numeric.value - exact.get_d());
    const bool pass = diff < kOracleTolerance;

    Report report(spec, ctx.rs);
    report.add("lambda", labels);
    report.add("m", *spec.m);
    report.add("exact", big_json(exact));
    report.add("numeric", numeric.value);
    report.add("abs_diff", diff);
    report.add("grid", numeric.grid);
    report.add("grid_exact", numeric.grid_exact);
    report.add("pass", pass);
    if (!numeric.grid_exact) report.add_text_only("warning: grid is below the exactness bound; quadrature may alias");
    report.write(out, start);
    return pass ? kSuccess : kOracleMismatch;
}

int cmd_bound(const JobSpec& spec, Context& ctx, std::ostream& out) {
    const auto start = Clock::now();
    Report report(spec, ctx.rs);
    report.add("bound", stabilization_bound(ctx.rs));
    if (auto classical = classical_stabilization_bound(ctx.rs.lie_type())) report.add("classical_bound", *classical);
    else report.add("classical_bound", nullptr);
    report.write(out, start);
    return kSuccess;
}

}  // namespace

int execute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        Context ctx{RootSystem::build(LieType::parse(spec.type)), std::nullopt};
        if (spec.command == "indicator") return cmd_indicator(spec, ctx, out);
        if (spec.command == "profile") return cmd_profile(spec, ctx, out);
        if (spec.command == "multiplicity") return cmd_multiplicity(spec, ctx, out);
        if (spec.command == "oracle") return cmd_oracle(spec, ctx, out);
        if (spec.command == "bound") return cmd_bound(spec, ctx, out);
        throw ValidationError("unknown command '" + spec.command + "'");
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::bad_alloc&) {
        err << "resource limit: out of memory\n";
        return kResource;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius-Schur indicators of irreducible representations of semisimple Lie algebras", "fsind"};
    app.require_subcommand(1);
    JobSpec spec;

    std::string format = "text";
    std::string engine = "freudenthal";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", spec.type, "Lie type: A<n>, B<n>, C<n>, D<n> or custom:<path>")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap-weyl", spec.cap_weyl, "Maximum Weyl group order");
        sub->add_option("--cap-support", spec.cap_support, "Maximum number of weights in a support");
    };
    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", spec.lambda, "Highest weight as comma-separated Dynkin labels")->required();
        sub->add_option("--engine", engine, "Multiplicity engine")->check(CLI::IsMember({"freudenthal", "kostant"}));
    };

    auto* ind = app.add_subcommand("indicator", "Compute nu_m(V(lambda))");
    add_common(ind);
    add_lambda(ind);
    ind->add_option("--m", spec.m, "Indicator degree (>= 2)")->required();

    auto* prof = app.add_subcommand("profile", "Compute nu_m for m = 2..m_max with the stabilization data");
    add_common(prof);
    add_lambda(prof);
    prof->add_option("--m-max", spec.m_max, "Largest degree")->required();

    auto* mult = app.add_subcommand("multiplicity", "Weight multiplicity dim V(lambda)[mu]");
    add_common(mult);
    add_lambda(mult);
    mult->add_option("--mu", spec.mu, "Weight as comma-separated rationals")->required();
    mult->add_option("--mu-basis", spec.mu_basis, "Coordinates of --mu: coroot pairings or simple roots")
        ->check(CLI::IsMember({"labels", "roots"}));

    auto* orc = app.add_subcommand("oracle", "Cross-check nu_m against torus quadrature");
    add_common(orc);
    add_lambda(orc);
    orc->add_option("--m", spec.m, "Indicator degree (>= 2)")->required();
    orc->add_option("--grid", spec.grid, "Quadrature grid sizes N1,...,Nr");
    orc->add_option("--cap-oracle-rank", spec.cap_oracle_rank, "Maximum rank for the oracle");

    auto* bnd = app.add_subcommand("bound", "Stabilization bound M");
    add_common(bnd);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidation;
    }

    spec.command = app.get_subcommands().front()->get_name();
    spec.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    spec.engine = engine == "kostant" ? MultiplicityEngine::Kostant : MultiplicityEngine::Freudenthal;
    return execute(spec, out, err);
}

}  // namespace fsind::cli
