// breakeven - command-line front end of the break-even analysis library.
//
// Talks to the core exclusively through the public C API.  Exit codes:
//   0 success, 2 invalid scenario/flags, 3 numeric domain error,
//   4 inverse problem out of domain, 1 anything else (I/O, internal).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <breakeven/breakeven.h>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInverse = 4;
constexpr int kExitIo = 1;

int exit_code_for(be_status status) {
    switch (status) {
        case BE_OK: return 0;
        case BE_ERR_INVALID_PARAMS: return kExitUsage;
        case BE_ERR_DOMAIN: return kExitDomain;
        case BE_ERR_OUT_OF_DOMAIN: return kExitInverse;
        default: return kExitIo;
    }
}

int report_status(be_status status) {
    std::fprintf(stderr, "error: %s\n", be_last_error_message());
    return exit_code_for(status);
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kExitUsage;
}

struct ProjectHandle {
    be_project* ptr = nullptr;
    ProjectHandle() = default;
    ProjectHandle(const ProjectHandle&) = delete;
    ProjectHandle& operator=(const ProjectHandle&) = delete;
    ~ProjectHandle() { be_project_destroy(ptr); }
};

// ---- scenario file ------------------------------------------------------

struct Scenario {
    be_project_params params{};
    std::optional<double> discount_rate;
    std::optional<double> growth_rate;
    std::optional<double> quantity;
    std::vector<double> r_grid;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key))
        throw ConfigError("missing required field '" + key + "'");
    if (!j.at(key).is_number())
        throw ConfigError("field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

std::optional<double> optional_number(const json& j, const std::string& key) {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number())
        throw ConfigError("field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

std::vector<double> parse_grid_object(const json& grid) {
    const double from = require_number(grid, "from");
    const double to = require_number(grid, "to");
    const double step = require_number(grid, "step");
    if (!(step > 0.0) || !(to >= from))
        throw ConfigError("r_grid must have step > 0 and to >= from");
    std::vector<double> rates;
    for (int i = 0;; ++i) {
        const double r = from + step * i;
        if (r > to * (1.0 + 1e-12) + 1e-15) break;
        rates.push_back(r);
        if (rates.size() > 1000000)
            throw ConfigError("r_grid expands to more than 1e6 points");
    }
    return rates;
}

void check_grid_increasing(const std::vector<double>& grid) {
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ConfigError("r_grid must be strictly increasing");
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario file '" + path + "' is not valid JSON: " +
                          e.what());
    }
    if (!j.is_object()) throw ConfigError("scenario must be a JSON object");

    Scenario s;
    s.params.initial_outlay = require_number(j, "initial_outlay");
    if (!j.contains("years") || !j.at("years").is_number_integer())
        throw ConfigError("field 'years' must be an integer");
    s.params.years = j.at("years").get<int>();
    s.params.price = require_number(j, "price");
    s.params.variable_cost = require_number(j, "variable_cost");
    s.params.fixed_costs = require_number(j, "fixed_costs");
    s.params.tax_rate = require_number(j, "tax_rate");
    s.discount_rate = optional_number(j, "discount_rate");
    s.growth_rate = optional_number(j, "growth_rate");
    s.quantity = optional_number(j, "quantity");

    if (j.contains("r_grid")) {
        const json& grid = j.at("r_grid");
        if (grid.is_array()) {
            for (const auto& item : grid) {
                if (!item.is_number())
                    throw ConfigError("r_grid entries must be numbers");
                s.r_grid.push_back(item.get<double>());
            }
        } else if (grid.is_object()) {
            s.r_grid = parse_grid_object(grid);
        } else {
            throw ConfigError(
                "r_grid must be an array or a {from,to,step} object");
        }
        check_grid_increasing(s.r_grid);
    }
    return s;
}

// ---- shared flags -------------------------------------------------------

struct Options {
    std::string config_path;
    std::string r_list;
    std::optional<double> r_from, r_to, r_step;
    std::optional<double> quantity;
    std::optional<double> growth;
    std::string params_list;
    std::optional<std::string> deltas_list;
    std::string format = "csv";
    int precision = 2;
    std::string out_path;
    std::string which;
};

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag) {
    std::vector<double> values;
    if (text.empty()) return values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &consumed);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse '" + item + "' in " + flag);
        }
        if (consumed != item.size())
            throw ConfigError("cannot parse '" + item + "' in " + flag);
        values.push_back(value);
    }
    return values;
}

// Grid precedence: --r-list, then --r-from/to/step, then the scenario.
std::vector<double> resolve_grid(const Options& opt, const Scenario& scenario) {
    if (!opt.r_list.empty()) {
        auto grid = parse_double_list(opt.r_list, "--r-list");
        check_grid_increasing(grid);
        return grid;
    }
    if (opt.r_from || opt.r_to || opt.r_step) {
        if (!(opt.r_from && opt.r_to && opt.r_step))
            throw ConfigError(
                "--r-from, --r-to and --r-step must be given together");
        json spec = {{"from", *opt.r_from},
                     {"to", *opt.r_to},
                     {"step", *opt.r_step}};
        return parse_grid_object(spec);
    }
    if (!scenario.r_grid.empty()) return scenario.r_grid;
    if (scenario.discount_rate) return {*scenario.discount_rate};
    throw ConfigError("no rate grid: pass --r-list or --r-from/--r-to/"
                      "--r-step, or put r_grid in the scenario");
}

double resolve_rate(const Options& opt, const Scenario& scenario) {
    if (!opt.r_list.empty()) {
        const auto rates = parse_double_list(opt.r_list, "--r-list");
        if (rates.size() != 1)
            throw ConfigError("this command takes a single rate; pass "
                              "--r-list with one value");
        return rates[0];
    }
    if (scenario.discount_rate) return *scenario.discount_rate;
    throw ConfigError("no discount rate: pass --r-list with one value or "
                      "put discount_rate in the scenario");
}

// ---- formatting ---------------------------------------------------------

std::string fixed(double value, int precision) {
    if (value == 0.0) value = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

std::string compact(double value) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

int write_output(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n",
                     out_path.c_str());
        return kExitIo;
    }
    out << body;
    if (!out) {
        std::fprintf(stderr, "error: write to '%s' failed\n",
                     out_path.c_str());
        return kExitIo;
    }
    return 0;
}

struct CurveContext {
    double a = 0.0;
    double b = 0.0;
    double q_c = 0.0;
};

be_status load_curve_context(const be_project* project, CurveContext* ctx) {
    be_status status = be_coeff_a(project, &ctx->a);
    if (status != BE_OK) return status;
    status = be_coeff_b(project, &ctx->b);
    if (status != BE_OK) return status;
    return be_accounting_breakeven(project, &ctx->q_c);
}

// ---- commands -----------------------------------------------------------

int cmd_npv(const Options& opt, const Scenario& scenario,
            const be_project* project) {
    const double rate = resolve_rate(opt, scenario);
    const std::optional<double> quantity =
        opt.quantity ? opt.quantity : scenario.quantity;

    CurveContext ctx;
    be_status status = load_curve_context(project, &ctx);
    if (status != BE_OK) return report_status(status);

    be_project_params params{};
    be_project_get_params(project, &params);

    double factor = 0.0;
    status = be_annuity_factor(rate, params.years, &factor);
    if (status != BE_OK) return report_status(status);

    double intercept = 0.0, slope = 0.0;
    status = be_npv_line(project, rate, &intercept, &slope);
    if (status != BE_OK) return report_status(status);

    double cash_flow_q0 = 0.0;
    be_net_cash_flow(project, 0.0, &cash_flow_q0);

    double q_f = 0.0;
    status = be_financial_breakeven(project, rate, &q_f);
    if (status != BE_OK) return report_status(status);

    double value = 0.0;
    be_sign sign = BE_SIGN_ZERO;
    if (quantity) {
        status = be_npv(project, *quantity, rate, &value);
        if (status != BE_OK) return report_status(status);
        status = be_npv_sign(project, *quantity, rate, &sign);
        if (status != BE_OK) return report_status(status);
    }
    const char* sign_name = sign == BE_SIGN_POSITIVE  ? "positive"
                            : sign == BE_SIGN_NEGATIVE ? "negative"
                                                        : "zero";

    std::string body;
    if (opt.format == "json") {
        json j = {{"r", rate},
                  {"f", factor},
                  {"a", ctx.a},
                  {"b", ctx.b},
                  {"q_c", ctx.q_c},
                  {"cash_flow_q0", cash_flow_q0},
                  {"h", intercept},
                  {"m", slope},
                  {"q_f", q_f}};
        if (quantity) {
            j["q"] = *quantity;
            j["npv"] = value;
            j["sign"] = sign_name;
        }
        body = j.dump() + "\n";
    } else if (opt.format == "csv") {
        return usage_error("npv emits a report, not a table; use --format "
                           "json or the default text");
    } else {
        const int p = opt.precision;
        body += "r: " + compact(rate) + "\n";
        body += "f: " + fixed(factor, p) + "\n";
        body += "a: " + fixed(ctx.a, p) + "\n";
        body += "b: " + fixed(ctx.b, p) + "\n";
        body += "q_c: " + fixed(ctx.q_c, p) + "\n";
        body += "cash_flow_q0: " + fixed(cash_flow_q0, p) + "\n";
        body += "h: " + fixed(intercept, p) + "\n";
        body += "m: " + fixed(slope, p) + "\n";
        body += "q_f: " + fixed(q_f, p) + "\n";
        if (quantity) {
            body += "q: " + fixed(*quantity, p) + "\n";
            body += "npv: " + fixed(value, p) + "\n";
            body += std::string("sign: ") + sign_name + "\n";
        }
    }
    return write_output(body, opt.out_path);
}

int emit_sweep_like(const Options& opt, const be_project* project,
                    const std::vector<double>& grid, bool with_asymptote) {
    CurveContext ctx;
    be_status status = load_curve_context(project, &ctx);
    if (status != BE_OK) return report_status(status);

    std::vector<double> quantities(grid.size());
    status = be_sweep(project, grid.data(), grid.size(), quantities.data());
    if (status != BE_OK) return report_status(status);

    std::string body;
    if (opt.format == "json") {
        json points = json::array();
        for (size_t i = 0; i < grid.size(); ++i) {
            json row = {{"r", grid[i]}, {"q_f", quantities[i]}};
            if (with_asymptote) row["asymptote"] = ctx.a + ctx.b * grid[i];
            points.push_back(row);
        }
        json j = {{"a", ctx.a},
                  {"b", ctx.b},
                  {"q_c", ctx.q_c},
                  {"points", points}};
        body = j.dump() + "\n";
    } else {
        const int p = opt.precision;
        body += "# a=" + fixed(ctx.a, p) + "\n";
        body += "# b=" + fixed(ctx.b, p) + "\n";
        body += "# q_c=" + fixed(ctx.q_c, p) + "\n";
        body += with_asymptote ? "r,q_f,asymptote\n" : "r,q_f\n";
        for (size_t i = 0; i < grid.size(); ++i) {
            body += compact(grid[i]) + "," + fixed(quantities[i], p);
            if (with_asymptote)
                body += "," + fixed(ctx.a + ctx.b * grid[i], p);
            body += "\n";
        }
    }
    return write_output(body, opt.out_path);
}

int cmd_sweep(const Options& opt, const Scenario& scenario,
              const be_project* project) {
    return emit_sweep_like(opt, project, resolve_grid(opt, scenario), false);
}

int cmd_invert(const Options& opt, const Scenario& scenario,
               const be_project* project) {
    const std::optional<double> quantity =
        opt.quantity ? opt.quantity : scenario.quantity;
    if (!quantity)
        return usage_error("invert needs a quantity: pass --q or put "
                           "quantity in the scenario");

    double q_c = 0.0;
    be_accounting_breakeven(project, &q_c);

    double rate = 0.0;
    const be_status status = be_invert_breakeven(project, *quantity, &rate);
    if (status != BE_OK) return report_status(status);

    double attained = 0.0;
    be_financial_breakeven(project, rate, &attained);
    const double residual = std::abs(attained - *quantity);

    std::string body;
    if (opt.format == "json") {
        json j = {{"q", *quantity},
                  {"q_c", q_c},
                  {"r", rate},
                  {"residual", residual}};
        body = j.dump() + "\n";
    } else {
        body += "q: " + fixed(*quantity, opt.precision) + "\n";
        body += "q_c: " + fixed(q_c, opt.precision) + "\n";
        body += "r: " + fixed(rate, opt.precision + 2) + "\n";
        body += "residual: " + compact(residual) + "\n";
    }
    return write_output(body, opt.out_path);
}

struct SensitivitySpec {
    std::vector<be_param> params;
    std::vector<double> deltas;
};

SensitivitySpec resolve_sensitivity(const Options& opt) {
    SensitivitySpec spec;
    std::string list = opt.params_list.empty() ? "p,cv,cf" : opt.params_list;
    std::stringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item == "p")
            spec.params.push_back(BE_PARAM_PRICE);
        else if (item == "cv")
            spec.params.push_back(BE_PARAM_VARIABLE_COST);
        else if (item == "cf")
            spec.params.push_back(BE_PARAM_FIXED_COSTS);
        else
            throw ConfigError("--param entries must be p, cv or cf (got '" +
                              item + "')");
    }
    spec.deltas = opt.deltas_list
                      ? parse_double_list(*opt.deltas_list, "--delta")
                      : std::vector<double>{-0.20, -0.10, 0.10, 0.20};
    return spec;
}

const char* param_name(be_param which) {
    switch (which) {
        case BE_PARAM_PRICE: return "price";
        case BE_PARAM_VARIABLE_COST: return "variable_cost";
        case BE_PARAM_FIXED_COSTS: return "fixed_costs";
    }
    return "?";
}

int emit_sensitivity(const Options& opt, const be_project* project,
                     const std::vector<double>& grid,
                     const SensitivitySpec& spec) {
    std::vector<double> base(grid.size());
    be_status status =
        be_sweep(project, grid.data(), grid.size(), base.data());
    if (status != BE_OK) return report_status(status);

    struct Row {
        std::string parameter;
        double delta;
        double rate;
        double q_f;
        double relative_change;
        bool feasible;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < grid.size(); ++i)
        rows.push_back({"base", 0.0, grid[i], base[i], 0.0, true});

    for (const be_param which : spec.params) {
        for (const double delta : spec.deltas) {
            ProjectHandle scaled;
            const be_status perturb_status =
                be_project_perturb(project, which, delta, &scaled.ptr);
            if (perturb_status != BE_OK &&
                perturb_status != BE_ERR_INVALID_PARAMS)
                return report_status(perturb_status);
            for (size_t i = 0; i < grid.size(); ++i) {
                Row row{param_name(which), delta, grid[i], 0.0, 0.0, false};
                if (perturb_status == BE_OK) {
                    status = be_financial_breakeven(scaled.ptr, grid[i],
                                                    &row.q_f);
                    if (status != BE_OK) return report_status(status);
                    row.relative_change = (row.q_f - base[i]) / base[i];
                    row.feasible = true;
                }
                rows.push_back(row);
            }
        }
    }

    std::string body;
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json j = {{"parameter", row.parameter},
                      {"delta", row.delta},
                      {"r", row.rate}};
            if (row.feasible) {
                j["q_f"] = row.q_f;
                j["relative_change"] = row.relative_change;
            } else {
                j["q_f"] = nullptr;
                j["relative_change"] = nullptr;
                j["note"] = "infeasible";
            }
            out.push_back(j);
        }
        body = json{{"rows", out}}.dump() + "\n";
    } else {
        body += "parameter,delta,r,q_f,relative_change,note\n";
        for (const auto& row : rows) {
            body += row.parameter;
            body += "," + compact(row.delta) + "," + compact(row.rate);
            if (row.feasible) {
                body += "," + fixed(row.q_f, opt.precision) + "," +
                        compact(row.relative_change) + ",";
            } else {
                body += ",,,infeasible";
            }
            body += "\n";
        }
    }
    return write_output(body, opt.out_path);
}

int cmd_sensitivity(const Options& opt, const Scenario& scenario,
                    const be_project* project) {
    return emit_sensitivity(opt, project, resolve_grid(opt, scenario),
                            resolve_sensitivity(opt));
}

int cmd_growth(const Options& opt, const Scenario& scenario,
               const be_project* project) {
    const std::optional<double> growth =
        opt.growth ? opt.growth : scenario.growth_rate;
    if (!growth)
        return usage_error("growth needs a rate: pass --g or put "
                           "growth_rate in the scenario");
    const std::vector<double> grid = resolve_grid(opt, scenario);

    CurveContext ctx;
    be_status status = load_curve_context(project, &ctx);
    if (status != BE_OK) return report_status(status);

    // r -> 0 limit: the closed form for g > 0, Q_c itself at g = 0
    double zero_limit = ctx.q_c;
    if (*growth > 0.0) {
        status = be_growth_zero_limit(project, *growth, &zero_limit);
        if (status != BE_OK) return report_status(status);
    }

    std::vector<double> grown(grid.size()), flat(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        status = be_financial_breakeven_growth(project, grid[i], *growth,
                                               &grown[i]);
        if (status != BE_OK) return report_status(status);
        status = be_financial_breakeven(project, grid[i], &flat[i]);
        if (status != BE_OK) return report_status(status);
    }

    std::string body;
    if (opt.format == "json") {
        json points = json::array();
        for (size_t i = 0; i < grid.size(); ++i)
            points.push_back({{"r", grid[i]},
                              {"q_f_growth", grown[i]},
                              {"q_f_nogrowth", flat[i]},
                              {"asymptote", ctx.a + ctx.b * grid[i]}});
        json j = {{"a", ctx.a},
                  {"b", ctx.b},
                  {"q_c", ctx.q_c},
                  {"g", *growth},
                  {"q_f_zero_rate_limit", zero_limit},
                  {"points", points}};
        body = j.dump() + "\n";
    } else {
        const int p = opt.precision;
        body += "# a=" + fixed(ctx.a, p) + "\n";
        body += "# b=" + fixed(ctx.b, p) + "\n";
        body += "# q_c=" + fixed(ctx.q_c, p) + "\n";
        body += "# g=" + compact(*growth) + "\n";
        body += "# q_f_zero_rate_limit=" + fixed(zero_limit, p) + "\n";
        body += "r,q_f_growth,q_f_nogrowth,asymptote\n";
        for (size_t i = 0; i < grid.size(); ++i)
            body += compact(grid[i]) + "," + fixed(grown[i], p) + "," +
                    fixed(flat[i], p) + "," +
                    fixed(ctx.a + ctx.b * grid[i], p) + "\n";
    }
    return write_output(body, opt.out_path);
}

int cmd_plotdata(const Options& opt, const Scenario& scenario,
                 const be_project* project) {
    if (opt.out_path.empty())
        return usage_error("plotdata requires --out PATH");
    Options csv_opt = opt;
    csv_opt.format = "csv";
    if (opt.which == "fig1")
        return emit_sweep_like(csv_opt, project,
                               resolve_grid(opt, scenario), false);
    if (opt.which == "fig2")
        return emit_sweep_like(csv_opt, project,
                               resolve_grid(opt, scenario), true);
    if (opt.which == "fig3")
        return emit_sensitivity(csv_opt, project,
                                resolve_grid(opt, scenario),
                                resolve_sensitivity(opt));
    return usage_error("--which must be fig1, fig2 or fig3");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Financial break-even analysis of an n-year investment "
                 "project"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "scenario JSON file")
            ->required();
        cmd->add_option("--r-list", opt.r_list,
                        "comma-separated discount rates");
        cmd->add_option("--r-from", opt.r_from, "grid start");
        cmd->add_option("--r-to", opt.r_to, "grid end");
        cmd->add_option("--r-step", opt.r_step, "grid step");
        cmd->add_option("--format", opt.format, "csv|json (npv/invert: json)");
        cmd->add_option("--precision", opt.precision,
                        "display decimals (default 2)")
            ->check(CLI::Range(0, 17));
        cmd->add_option("--out", opt.out_path, "write output to file");
        return cmd;
    };

    CLI::App* npv = add_common(app.add_subcommand(
        "npv", "NPV line, break-even quantities, sign at Q"));
    npv->add_option("--q", opt.quantity, "quantity sold per year");
    npv->get_option("--format")->default_str("text");

    CLI::App* sweep = add_common(app.add_subcommand(
        "sweep", "break-even quantity over a rate grid"));

    CLI::App* invert = add_common(app.add_subcommand(
        "invert", "discount rate at which Q breaks even"));
    invert->add_option("--q", opt.quantity, "quantity sold per year");
    invert->get_option("--format")->default_str("text");

    CLI::App* sensitivity = add_common(app.add_subcommand(
        "sensitivity", "break-even shift under parameter perturbations"));
    sensitivity->add_option("--param", opt.params_list,
                            "comma list of p,cv,cf (default all)");
    sensitivity->add_option("--delta", opt.deltas_list,
                            "comma list of fractions (default "
                            "-0.2,-0.1,0.1,0.2; empty = base only)");

    CLI::App* growth = add_common(app.add_subcommand(
        "growth", "break-even curve under output growth"));
    growth->add_option("--g", opt.growth, "annual output growth rate");

    CLI::App* plotdata = add_common(app.add_subcommand(
        "plotdata", "plot-ready CSV for the standard figures"));
    plotdata->add_option("--which", opt.which, "fig1|fig2|fig3")->required();
    plotdata->add_option("--g", opt.growth, "annual output growth rate");
    plotdata->add_option("--param", opt.params_list,
                         "comma list of p,cv,cf (fig3)");
    plotdata->add_option("--delta", opt.deltas_list,
                         "comma list of fractions (fig3)");

    // npv/invert default to the text report
    if (argc > 1 && (std::string(argv[1]) == "npv" ||
                     std::string(argv[1]) == "invert"))
        opt.format = "text";

    CLI11_PARSE(app, argc, argv);

    try {
        const Scenario scenario = load_scenario(opt.config_path);

        ProjectHandle project;
        const be_status status =
            be_project_create(&scenario.params, &project.ptr);
        if (status != BE_OK) return report_status(status);

        if (npv->parsed()) return cmd_npv(opt, scenario, project.ptr);
        if (sweep->parsed()) return cmd_sweep(opt, scenario, project.ptr);
        if (invert->parsed()) return cmd_invert(opt, scenario, project.ptr);
        if (sensitivity->parsed())
            return cmd_sensitivity(opt, scenario, project.ptr);
        if (growth->parsed()) return cmd_growth(opt, scenario, project.ptr);
        if (plotdata->parsed())
            return cmd_plotdata(opt, scenario, project.ptr);
    } catch (const ConfigError& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return 0;
}
