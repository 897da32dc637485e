#include "nodal/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "nodal/error.hpp"
#include "nodal/json_io.hpp"

namespace nodal::cli {

namespace {

constexpr std::uint64_t kDefaultMaxCells = 1'000'000;

// A command-line value that is syntactically wrong; reported with exit code 2.
struct UsageError {
    std::string message;
};

struct CommandResult {
    std::string command;
    std::map<std::string, std::string> inputs;
    json outputs = json::object();
    std::vector<std::string> warnings;

    json to_json() const {
        return json{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"warnings", warnings}};
    }
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError{"invalid value for " + flag + ": " + e.what()};
    }
}

IntRange parse_flag_range(const std::string& flag, const std::string& text) {
    try {
        return IntRange::parse(text);
    } catch (const ParseError& e) {
        throw UsageError{"invalid value for " + flag + ": " + e.what()};
    }
}

std::uint64_t max_cells() {
    const char* env = std::getenv("NODAL_MODULI_MAX_CELLS");
    if (env == nullptr || *env == '\0') return kDefaultMaxCells;
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw InvalidArgument("NODAL_MODULI_MAX_CELLS must be a nonnegative integer, got '" + std::string(s) + "'");
    return v;
}

std::map<std::string, std::string> collect_inputs(const CLI::App& sub) {
    std::map<std::string, std::string> inputs;
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string name = opt->get_name();
        name.erase(0, name.find_first_not_of('-'));
        if (opt->get_type_size() == 0) {
            inputs[name] = "true";
        } else {
            inputs[name] = opt->as<std::string>();
        }
    }
    return inputs;
}

json interval_pair(const RationalInterval& iv) {
    if (iv.is_empty()) return nullptr;
    return json::array({iv.lower() ? json(*iv.lower()) : json(nullptr), iv.upper() ? json(*iv.upper()) : json(nullptr)});
}

std::string bound_str(const RationalInterval::Bound& b) { return b ? b->str() : std::string(); }

// Values bound to the options of every subcommand.
struct Args {
    std::int64_t r = 0, k = 0, chi = 0, chi1 = 0, chi2 = 0, g1 = 0, g2 = 0;
    std::int64_t sub_d = 0, sub_rk = 0, amb_d = 0, amb_rk = 0, m = 0;
    std::string w1, chi1_range, chi2_range, matrix_path, format = "json";
    bool strict = false, json_flag = false;
};

int cmd_feasible(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    const FeasibilityReport rep = feasible_interval(a.r, a.k, a.chi1, a.chi2);
    res.outputs = rep;
    res.outputs["interval"] = interval_pair(rep.w1_interval);
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_region(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    const IntRange c1 = parse_flag_range("--chi1", a.chi1_range);
    const IntRange c2 = parse_flag_range("--chi2", a.chi2_range);
    const std::uint64_t cells = c1.empty() || c2.empty() ? 0 : c1.size() * c2.size();
    const std::uint64_t cap = max_cells();
    if (cells > cap || (c1.size() != 0 && cells / c1.size() != c2.size()))
        throw InvalidArgument("region has " + std::to_string(cells) + " lattice points, above the cap of " +
                              std::to_string(cap) + " (NODAL_MODULI_MAX_CELLS)");
    const auto rows = region_scan(a.r, a.k, c1, c2);
    if (a.format == "csv") {
        out << "chi1,chi2,feasible,w1_lo,w1_hi\n";
        for (const auto& row : rows) {
            out << row.chi1 << ',' << row.chi2 << ',' << (row.feasible ? "true" : "false") << ',';
            if (row.feasible) out << bound_str(row.w1_interval.lower()) << ',' << bound_str(row.w1_interval.upper());
            else out << ',';
            out << '\n';
        }
        return kOk;
    }
    res.outputs["rows"] = rows;
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_components(const Args& a, CommandResult& res, std::ostream& out, std::ostream& err) {
    const NodalCurve curve(a.g1, a.g2);
    const Polarization w = Polarization::from_w1(parse_flag_rational("--w1", a.w1));
    const ComponentEnumeration en = enumerate_components(curve, a.r, a.chi, w);
    if (a.format == "csv") {
        for (const auto& wmsg : en.warnings) err << "warning: " << wmsg << '\n';
        out << "chi1,chi2,d1,d2,dimension\n";
        for (const auto& rec : en.records)
            out << rec.chi1 << ',' << rec.chi2 << ',' << rec.d1 << ',' << rec.d2 << ',' << rec.dimension << '\n';
        return kOk;
    }
    res.warnings = en.warnings;
    res.outputs["components"] = en.records;
    res.outputs["count"] = en.records.size();
    res.outputs["non_generic"] = en.non_generic;
    res.outputs["polarization"] = w;
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_glue(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    std::ifstream in(a.matrix_path);
    if (!in) throw UsageError{"cannot open matrix file " + a.matrix_path};
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    const GluingDatum u = GluingDatum::from_matrix(matrix_from_json(doc), a.chi1, a.chi2);
    res.outputs = glued_class(u);
    res.outputs["r"] = u.r();
    res.outputs["k"] = u.k();
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_check_sufficiency(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    const StabilityHypotheses h(NodalCurve(a.g1, a.g2), a.r, a.k, a.chi1, a.chi2);
    std::optional<Polarization> w;
    if (!a.w1.empty()) {
        w = Polarization::from_w1(parse_flag_rational("--w1", a.w1));
    } else {
        w = feasible_interval(a.r, a.k, a.chi1, a.chi2).sample;
        if (!w) throw InvalidArgument("(chi1, chi2) is outside W_{r,k}: no polarization satisfies the necessary conditions");
        res.warnings.push_back("no --w1 given; using the sample polarization of the feasible interval");
    }
    const SufficiencyResult result = check_sufficiency(h, *w, a.strict);
    res.outputs = result;
    res.outputs["polarization"] = *w;
    res.outputs["hypothesis"] = a.strict ? "stable" : "semistable";
    res.outputs["slope"] = polarized_slope(glued_class(h.datum()).sheaf, *w);
    res.outputs["degrees"] = json::array({h.d1(), h.d2()});
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_dims(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    const NodalCurve curve(a.g1, a.g2);
    res.outputs = json{
        {"arithmetic_genus", arithmetic_genus(curve)},
        {"component", component_dimension(curve, a.r)},
        {"pf_bundle", projective_bundle_dimension(curve, a.r)},
        {"fixed_det_fiber", fixed_det_fiber_dimension(curve, a.r)},
    };
    emit_json(out, res.to_json());
    return kOk;
}

int cmd_mk_test(const Args& a, CommandResult& res, std::ostream& out, std::ostream&) {
    const bool holds = mk_semistable_test({a.sub_d, a.sub_rk}, {a.amb_d, a.amb_rk}, a.m, a.k, a.strict);
    res.outputs = json{
        {"holds", holds},
        {"lhs", mk_slope(a.sub_d, a.sub_rk, a.m)},
        {"rhs", mk_slope(a.amb_d, a.amb_rk, a.m - a.k)},
        {"strict", a.strict},
    };
    emit_json(out, res.to_json());
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polarization feasibility and moduli invariants for sheaves on a two-component nodal curve",
                 "nodal-moduli"};
    app.require_subcommand(1);
    Args a;

    using Handler = std::function<int(const Args&, CommandResult&, std::ostream&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;

    {
        auto* sub = app.add_subcommand("feasible", "Exact w1-interval satisfying the necessary conditions");
        sub->add_option("--r", a.r, "rank on each component")->required();
        sub->add_option("--k", a.k, "rank of the gluing map")->required();
        sub->add_option("--chi1", a.chi1, "Euler characteristic of E1")->required();
        sub->add_option("--chi2", a.chi2, "Euler characteristic of E2")->required();
        sub->add_flag("--json", a.json_flag, "JSON output (the default)");
        commands.emplace_back(sub, cmd_feasible);
    }
    {
        auto* sub = app.add_subcommand("region", "Tabulate W_{r,k} over a box of (chi1, chi2)");
        sub->add_option("--r", a.r)->required();
        sub->add_option("--k", a.k)->required();
        sub->add_option("--chi1", a.chi1_range, "range lo:hi")->required();
        sub->add_option("--chi2", a.chi2_range, "range lo:hi")->required();
        sub->add_option("--format", a.format)->check(CLI::IsMember({"csv", "json"}));
        commands.emplace_back(sub, cmd_region);
    }
    {
        auto* sub = app.add_subcommand("components", "Enumerate irreducible components of U_C(w, r, chi)");
        sub->add_option("--g1", a.g1)->required();
        sub->add_option("--g2", a.g2)->required();
        sub->add_option("--r", a.r)->required();
        sub->add_option("--chi", a.chi)->required();
        sub->add_option("--w1", a.w1, "weight on C1 as p/q")->required();
        sub->add_option("--format", a.format)->check(CLI::IsMember({"csv", "json"}));
        commands.emplace_back(sub, cmd_components);
    }
    {
        auto* sub = app.add_subcommand("glue", "Invariants of the sheaf glued along a fiber matrix");
        sub->add_option("--matrix", a.matrix_path, "JSON file: array of rows of \"p/q\" strings")->required();
        sub->add_option("--chi1", a.chi1)->required();
        sub->add_option("--chi2", a.chi2)->required();
        commands.emplace_back(sub, cmd_glue);
    }
    {
        auto* sub = app.add_subcommand("check-sufficiency", "Search for a destabilizing subsheaf tuple");
        sub->add_option("--r", a.r)->required();
        sub->add_option("--k", a.k)->required();
        sub->add_option("--chi1", a.chi1)->required();
        sub->add_option("--chi2", a.chi2)->required();
        sub->add_option("--g1", a.g1)->required();
        sub->add_option("--g2", a.g2)->required();
        sub->add_option("--w1", a.w1, "weight on C1 as p/q; defaults to the feasible sample");
        sub->add_flag("--strict", a.strict, "assume stable bundles and test strict inequality");
        commands.emplace_back(sub, cmd_check_sufficiency);
    }
    {
        auto* sub = app.add_subcommand("dims", "Dimension formulas");
        sub->add_option("--g1", a.g1)->required();
        sub->add_option("--g2", a.g2)->required();
        sub->add_option("--r", a.r)->required();
        commands.emplace_back(sub, cmd_dims);
    }
    {
        auto* sub = app.add_subcommand("mk-test", "(m,k)-semistability slope comparison");
        sub->add_option("--sub-d", a.sub_d)->required();
        sub->add_option("--sub-rk", a.sub_rk)->required();
        sub->add_option("--amb-d", a.amb_d)->required();
        sub->add_option("--amb-rk", a.amb_rk)->required();
        sub->add_option("--m", a.m)->required();
        sub->add_option("--k", a.k)->required();
        sub->add_flag("--strict", a.strict);
        commands.emplace_back(sub, cmd_mk_test);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        CommandResult res;
        res.command = sub->get_name();
        res.inputs = collect_inputs(*sub);
        try {
            return handler(a, res, out, err);
        } catch (const UsageError& e) {
            err << "error: " << e.message << "\n\n" << sub->help();
            return kUsageError;
        } catch (const Error& e) {
            emit_json(out, json{{"command", res.command},
                                {"inputs", res.inputs},
                                {"error", {{"kind", e.kind()}, {"message", e.what()}}}});
            return kDomainError;
        }
    }
    err << app.help();
    return kUsageError;
}

} // namespace nodal::cli
