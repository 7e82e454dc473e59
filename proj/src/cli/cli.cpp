#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mlein/becker.hpp"
#include "mlein/cm_verify.hpp"
#include "mlein/ein_generalized.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/exp_integral.hpp"
#include "mlein/special_core.hpp"
#include "mlein/trig_integral.hpp"

#ifndef MLEIN_VERSION
#define MLEIN_VERSION "0.0.0"
#endif

namespace mlein::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Curve = std::function<EvalResult(double x, double tol)>;

const std::vector<double> kFigureOrders = {0.25, 0.5, 0.75, 1.0};
const std::vector<double> kCreepOrders = {0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kVerifyOrders = {0.25, 0.5, 0.75, 1.0};

struct Options {
    std::string fn;
    std::string nu;
    double mu = 1.0;
    std::string points;
    std::string grid;
    std::string range;
    int count = 0;
    double tol = kDefaultTolerance;
    std::string out_path;
    std::string kind = "frequency";
    std::string suite = "all";
    std::string figure;
};

std::string format(double v)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, v, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

double parse_number(std::string_view text, std::string_view what)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        throw UsageError("bad number '" + std::string(text) + "' in " + std::string(what));
    }
    return value;
}

std::vector<double> parse_list(const std::string& text, std::string_view what)
{
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        values.push_back(parse_number(std::string_view(text).substr(start, comma - start), what));
        start = comma + 1;
    }
    return values;
}

std::vector<double> orders(const Options& o, const std::vector<double>& fallback)
{
    return o.nu.empty() ? fallback : parse_list(o.nu, "--nu");
}

double single_order(const Options& o, std::string_view command)
{
    if (o.nu.empty()) throw UsageError(std::string(command) + " needs --nu");
    const std::vector<double> values = parse_list(o.nu, "--nu");
    if (values.size() != 1) throw UsageError(std::string(command) + " takes a single --nu");
    return values.front();
}

// Explicit --points win; otherwise --range/--count/--grid refine the default grid.
std::vector<double> abscissae(const Options& o, const Grid& fallback)
{
    if (!o.points.empty()) {
        if (!o.range.empty() || o.count != 0) {
            throw UsageError("--points cannot be combined with --range or --count");
        }
        return parse_list(o.points, "--points");
    }
    Grid grid = fallback;
    if (!o.range.empty()) {
        const std::size_t colon = o.range.find(':');
        if (colon == std::string::npos) throw UsageError("--range expects a:b");
        grid.start = parse_number(std::string_view(o.range).substr(0, colon), "--range");
        grid.stop = parse_number(std::string_view(o.range).substr(colon + 1), "--range");
    }
    if (o.count != 0) grid.count = o.count;
    if (!o.grid.empty()) grid.kind = o.grid == "log" ? GridKind::Logarithmic : GridKind::Linear;
    try {
        return grid.points();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string where(double nu, double x)
{
    return "nu=" + format(nu) + ", x=" + format(x);
}

// Registered functions for `eval`. Entries taking an order read --nu, and
// the two-parameter Mittag-Leffler function also reads --mu.
struct Registered {
    bool needs_order;
    std::function<EvalResult(double nu, double mu, double x, double tol)> eval;
};

const std::map<std::string, Registered>& registry()
{
    static const std::map<std::string, Registered> table = {
        {"ein", {false, [](double, double, double x, double tol) { return ein(x, tol); }}},
        {"e1", {false, [](double, double, double x, double tol) { return e1(x, tol); }}},
        {"ei", {false, [](double, double, double x, double tol) { return ei(x, tol); }}},
        {"e_nu", {true, [](double nu, double, double x, double tol) { return e_nu(nu, x, tol); }}},
        {"gamma_upper",
         {true, [](double a, double, double x, double tol) { return gamma_upper(a, x, tol); }}},
        {"ml", {true, [](double nu, double mu, double z, double tol) {
                    return ml_two({nu, mu}, z, tol);
                }}},
        {"ml_neg_power", {true, [](double nu, double mu, double t, double tol) {
                              return ml_neg_power({nu, mu}, t, tol);
                          }}},
        {"ein_nu", {true, [](double nu, double, double t, double tol) { return ein_nu(nu, t, tol); }}},
        {"ein_nu_integrand", {true, [](double nu, double, double u, double tol) {
                                  return ein_nu_integrand(nu, u, tol);
                              }}},
        {"creep_psi",
         {true, [](double nu, double, double t, double tol) { return creep_psi(nu, t, tol); }}},
        {"creep_rate",
         {true, [](double nu, double, double t, double tol) { return creep_rate(nu, t, tol); }}},
        {"laplace_psi", {true, [](double nu, double, double s, double tol) {
                             return laplace_psi_series(nu, s, tol);
                         }}},
        {"laplace_rate", {true, [](double nu, double, double s, double tol) {
                              return laplace_rate_series(nu, s, tol);
                          }}},
        {"spectrum_frequency", {true, [](double nu, double, double r, double tol) {
                                    return spectrum_frequency(nu, r, tol);
                                }}},
        {"spectrum_time", {true, [](double nu, double, double tau, double tol) {
                               return spectrum_time(nu, tau, tol);
                           }}},
        {"si", {false, [](double, double, double x, double tol) { return si_classic(x, tol); }}},
        {"si_lower", {false, [](double, double, double x, double tol) { return si_lower(x, tol); }}},
        {"cin", {false, [](double, double, double x, double tol) { return cin(x, tol); }}},
        {"ci", {false, [](double, double, double x, double tol) { return ci(x, tol); }}},
        {"sin_frac",
         {true, [](double nu, double, double x, double tol) { return sin_frac(nu, x, tol); }}},
        {"cos_frac",
         {true, [](double nu, double, double x, double tol) { return cos_frac(nu, x, tol); }}},
        {"sin_integral_nu", {true, [](double nu, double, double x, double tol) {
                                 return sin_integral_nu(nu, x, tol);
                             }}},
        {"cin_integral_nu", {true, [](double nu, double, double x, double tol) {
                                 return cin_integral_nu(nu, x, tol);
                             }}},
    };
    return table;
}

void cmd_eval(const Options& o, std::ostream& out)
{
    const auto found = registry().find(o.fn);
    if (found == registry().end()) throw UsageError("unknown function '" + o.fn + "'");
    const double nu = found->second.needs_order ? single_order(o, "eval --fn " + o.fn) : 0.0;
    if (o.points.empty() && o.range.empty()) throw UsageError("eval needs --points or --range");
    const std::vector<double> x = abscissae(o, Grid::linear(0.0, 10.0, 201));
    out << "x,value,abs_err_estimate,method,terms\n";
    for (double point : x) {
        EvalResult r;
        try {
            r = found->second.eval(nu, o.mu, point, o.tol);
        } catch (const Error& e) {
            throw std::runtime_error(o.fn + " at x=" + format(point) + ": " + e.what());
        }
        out << format(point) << ',' << format(r.value) << ',' << format(r.abs_err_estimate) << ','
            << to_string(r.method) << ',' << r.terms_used << '\n';
    }
}

struct Figure {
    std::vector<double> orders;
    Grid grid;
    std::function<Curve(double nu)> curve;
};

Figure figure_definition(const std::string& id)
{
    const Grid linear = Grid::linear(0.0, 10.0, 201);
    const Grid decades = Grid::logarithmic(1e-2, 1e2, 201);
    auto creep = [](bool rate) {
        return [rate](double nu) -> Curve {
            const auto model = std::make_shared<BeckerModel>(nu);
            if (rate) return [model](double t, double tol) { return model->rate(t, tol); };
            return [model](double t, double tol) { return model->psi(t, tol); };
        };
    };
    auto spectrum = [](bool frequency) {
        return [frequency](double nu) -> Curve {
            const auto model = std::make_shared<BeckerModel>(nu);
            if (frequency) {
                return [model](double r, double tol) { return model->spectrum_frequency(r, tol); };
            }
            return [model](double tau, double tol) { return model->spectrum_time(tau, tol); };
        };
    };
    using Member = EvalResult (FractionalCircular::*)(double, double) const;
    auto circular = [](Member member) {
        return [member](double nu) -> Curve {
            const auto f = std::make_shared<FractionalCircular>(nu);
            return [f, member](double x, double tol) { return ((*f).*member)(x, tol); };
        };
    };
    if (id == "Fig1Left") return {kCreepOrders, linear, creep(false)};
    if (id == "Fig1Right") return {kCreepOrders, linear, creep(true)};
    if (id == "Fig2Left") return {kFigureOrders, decades, spectrum(true)};
    if (id == "Fig2Right") return {kFigureOrders, decades, spectrum(false)};
    if (id == "Fig3Left") return {kFigureOrders, linear, circular(&FractionalCircular::sin)};
    if (id == "Fig3Right") return {kFigureOrders, linear, circular(&FractionalCircular::cos)};
    if (id == "Fig4Left") return {kFigureOrders, linear, circular(&FractionalCircular::sin_integral)};
    if (id == "Fig4Right") return {kFigureOrders, linear, circular(&FractionalCircular::cin_integral)};
    throw UsageError("unknown figure '" + id + "'");
}

void cmd_figure(const Options& o, std::ostream& out)
{
    const Figure figure = figure_definition(o.figure);
    const std::vector<double> x = abscissae(o, figure.grid);
    const std::vector<double> nus = orders(o, figure.orders);
    out << "figure,nu,x,y\n";
    for (double nu : nus) {
        Curve curve;
        try {
            curve = figure.curve(nu);
        } catch (const Error& e) {
            throw std::runtime_error(o.figure + " failed at nu=" + format(nu) + ": " + e.what());
        }
        for (double point : x) {
            EvalResult r;
            try {
                r = curve(point, o.tol);
            } catch (const Error& e) {
                throw std::runtime_error(o.figure + " failed at " + where(nu, point) + ": " + e.what());
            }
            out << o.figure << ',' << format(nu) << ',' << format(point) << ',' << format(r.value)
                << '\n';
        }
    }
}

void cmd_creep(const Options& o, std::ostream& out)
{
    const std::vector<double> nus = orders(o, kCreepOrders);
    const std::vector<double> t = abscissae(o, Grid::linear(0.0, 10.0, 201));
    out << "nu,t,psi,psi_rate\n";
    for (double nu : nus) {
        for (const CreepSample& sample : creep_table(nu, t, o.tol)) {
            out << format(nu) << ',' << format(sample.t) << ',' << format(sample.psi) << ','
                << format(sample.psi_rate) << '\n';
        }
    }
}

void cmd_spectrum(const Options& o, std::ostream& out)
{
    const SpectrumKind kind = o.kind == "time" ? SpectrumKind::Time : SpectrumKind::Frequency;
    const std::vector<double> nus = orders(o, kFigureOrders);
    const std::vector<double> x = abscissae(o, Grid::logarithmic(1e-2, 1e2, 201));
    out << "kind,nu,abscissa,density\n";
    for (double nu : nus) {
        const SpectrumTable table = spectrum_table(nu, kind, x, o.tol);
        for (const SpectrumPoint& p : table.points) {
            out << o.kind << ',' << format(nu) << ',' << format(p.abscissa) << ','
                << format(p.density) << '\n';
        }
    }
}

void cmd_trig(const Options& o, std::ostream& out)
{
    const double nu = single_order(o, "trig");
    const std::vector<double> x = abscissae(o, Grid::linear(0.0, 10.0, 201));
    const FractionalCircular f(nu);
    out << "x,sin_nu,cos_nu,Sin_nu,Cin_nu\n";
    for (double point : x) {
        try {
            out << format(point) << ',' << format(f.sin(point, o.tol).value) << ','
                << format(f.cos(point, o.tol).value) << ','
                << format(f.sin_integral(point, o.tol).value) << ','
                << format(f.cin_integral(point, o.tol).value) << '\n';
        } catch (const Error& e) {
            throw std::runtime_error("trig at " + where(nu, point) + ": " + e.what());
        }
    }
}

// verify

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

template <class Fn>
Check guarded(const std::string& name, Fn&& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, std::string("error=\"") + e.what() + "\""};
    }
}

std::string order_label(double nu) { return "(nu=" + format(nu) + ")"; }

Check max_deviation(const std::string& name, const std::vector<double>& x,
                    const std::function<double(double)>& f, const std::function<double(double)>& g,
                    double limit)
{
    return guarded(name, [&] {
        double worst = 0.0;
        for (double point : x) worst = std::max(worst, std::abs(f(point) - g(point)));
        return Check{name, worst <= limit, "max_abs_err=" + format(worst)};
    });
}

std::vector<Check> suite_reductions()
{
    const std::vector<double> x = Grid::linear(0.0, 10.0, 201).points();
    const double limit = 1e-12;
    const FractionalCircular one(1.0);
    std::vector<Check> checks;
    checks.push_back(max_deviation(
        "reduction.ein_nu", x, [](double t) { return ein_nu(1.0, t).value; },
        [](double t) { return ein(t).value; }, limit));
    checks.push_back(max_deviation(
        "reduction.sin_nu", x, [&](double t) { return one.sin(t).value; },
        [](double t) { return std::sin(t); }, limit));
    checks.push_back(max_deviation(
        "reduction.cos_nu", x, [&](double t) { return one.cos(t).value; },
        [](double t) { return std::cos(t); }, limit));
    checks.push_back(max_deviation(
        "reduction.Sin_nu", x, [&](double t) { return one.sin_integral(t).value; },
        [](double t) { return si_classic(t).value; }, limit));
    checks.push_back(max_deviation(
        "reduction.Cin_nu", x, [&](double t) { return one.cin_integral(t).value; },
        [](double t) { return cin(t).value; }, limit));
    checks.push_back(max_deviation(
        "reduction.creep_rate", x, [](double t) { return creep_rate(1.0, t).value; },
        [](double t) { return t == 0.0 ? 1.0 : -std::expm1(-t) / t; }, limit));
    const std::vector<double> positive = Grid::logarithmic(1e-3, 50.0, 60).points();
    checks.push_back(max_deviation(
        "reduction.e1_ein", positive,
        [](double t) { return e1(t).value + kEulerGamma + std::log(t); },
        [](double t) { return ein(t).value; }, limit));
    return checks;
}

Check from_report(const CMReport& report)
{
    std::string detail = "violations=" + std::to_string(report.violations.size());
    if (!report.violations.empty()) {
        const Violation& v = report.violations.front();
        detail += " first_order=" + std::to_string(v.order) + " first_x=" + format(v.abscissa);
    }
    return {report.function_id, report.passed, detail};
}

std::vector<Check> suite_cm()
{
    std::vector<Check> checks;
    for (double nu : kVerifyOrders) {
        const std::string name = "cm.psi_rate" + order_label(nu);
        checks.push_back(guarded(name, [&] {
            const BeckerModel model(nu);
            return from_report(check_cm([&](double t) { return model.rate(t).value; },
                                        default_cm_grid(), kDefaultCMOrder, name));
        }));
    }
    return checks;
}

std::vector<Check> suite_bernstein()
{
    std::vector<Check> checks;
    for (double nu : kVerifyOrders) {
        const std::string name = "bernstein.psi" + order_label(nu);
        checks.push_back(guarded(name, [&] {
            const BeckerModel model(nu);
            return from_report(check_bernstein([&](double t) { return model.psi(t).value; },
                                               default_cm_grid(), kDefaultCMOrder, name));
        }));
    }
    return checks;
}

std::vector<Check> suite_spectra()
{
    const std::vector<double> grid = Grid::logarithmic(1e-2, 1e2, 201).points();
    std::vector<Check> checks;
    for (double nu : kVerifyOrders) {
        for (SpectrumKind kind : {SpectrumKind::Frequency, SpectrumKind::Time}) {
            const std::string name = std::string("spectra.")
                                     + (kind == SpectrumKind::Frequency ? "frequency" : "time")
                                     + order_label(nu);
            checks.push_back(guarded(name, [&] {
                const SpectrumTable table = spectrum_table(nu, kind, grid);
                return Check{name, table.non_negative, "min_density=" + format(table.min_density)};
            }));
        }
        const std::string name = "spectra.time_frequency" + order_label(nu);
        checks.push_back(guarded(name, [&] {
            const BeckerModel model(nu);
            double worst = 0.0;
            for (double tau : grid) {
                const double h = model.spectrum_time(tau).value;
                const double k = model.spectrum_frequency(1.0 / tau).value / (tau * tau);
                worst = std::max(worst, std::abs(h - k) / std::max(std::abs(k), 1e-300));
            }
            return Check{name, worst <= 1e-12, "max_rel_err=" + format(worst)};
        }));
    }
    checks.push_back(guarded("spectra.box(nu=1)", [&] {
        const BeckerModel model(1.0);
        bool exact = true;
        for (double r : grid) {
            if (r == 1.0) continue;
            exact = exact && model.spectrum_frequency(r).value == (r < 1.0 ? 1.0 : 0.0);
        }
        return Check{"spectra.box(nu=1)", exact, std::string("exact=") + (exact ? "1" : "0")};
    }));
    return checks;
}

std::vector<Check> suite_reconstruction()
{
    const Grid t = Grid::logarithmic(0.1, 10.0, 21);
    std::vector<Check> checks;
    for (double nu : kVerifyOrders) {
        const std::string name = "reconstruction" + order_label(nu);
        checks.push_back(guarded(name, [&] {
            const CMReport report = check_reconstruction(nu, t, 1e-3);
            return Check{name, report.passed, "max_rel_err=" + format(report.max_relative_error)};
        }));
    }
    return checks;
}

bool cmd_verify(const Options& o, std::ostream& out)
{
    static const std::vector<std::pair<std::string, std::vector<Check> (*)()>> suites = {
        {"reductions", suite_reductions}, {"cm", suite_cm},
        {"bernstein", suite_bernstein},   {"spectra", suite_spectra},
        {"reconstruction", suite_reconstruction},
    };
    std::vector<Check> checks;
    for (const auto& [name, run_suite] : suites) {
        if (o.suite != "all" && o.suite != name) continue;
        const std::vector<Check> part = run_suite();
        checks.insert(checks.end(), part.begin(), part.end());
    }
    int failed = 0;
    for (const Check& c : checks) {
        if (!c.passed) ++failed;
        out << "check=" << c.name << " status=" << (c.passed ? "PASS" : "FAIL") << ' ' << c.detail
            << '\n';
    }
    out << "summary suite=" << o.suite << " checks=" << checks.size() << " failed=" << failed << '\n';
    return failed == 0;
}

std::vector<std::string> function_names()
{
    std::vector<std::string> names;
    for (const auto& entry : registry()) names.push_back(entry.first);
    return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exponential, Mittag-Leffler and fractional trigonometric integrals", "mlein"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MLEIN_VERSION);

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "error tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out_path, "write data to FILE instead of stdout");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--points", o.points, "comma separated abscissae");
        sub->add_option("--grid", o.grid, "grid spacing")->check(CLI::IsMember({"lin", "log"}));
        sub->add_option("--range", o.range, "grid range a:b");
        sub->add_option("--count", o.count, "grid points")->check(CLI::Range(2, 10000000));
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function on a set of points");
    eval->add_option("--fn", o.fn, "function name")->required();
    eval->add_option("--nu", o.nu, "order");
    eval->add_option("--mu", o.mu, "second Mittag-Leffler parameter");
    add_grid(eval);
    add_output(eval);
    eval->footer("functions: " + CLI::detail::join(function_names(), " "));

    CLI::App* figure = app.add_subcommand("figure", "emit the curve family of a figure");
    figure->add_option("id", o.figure, "Fig1Left ... Fig4Right")->required();
    figure->add_option("--nu", o.nu, "comma separated orders");
    add_grid(figure);
    add_output(figure);

    CLI::App* creep = app.add_subcommand("creep", "creep function and rate table");
    creep->add_option("--nu", o.nu, "comma separated orders");
    add_grid(creep);
    add_output(creep);

    CLI::App* spectrum = app.add_subcommand("spectrum", "relaxation spectrum table");
    spectrum->add_option("--nu", o.nu, "comma separated orders");
    spectrum->add_option("--kind", o.kind, "frequency or time")
        ->check(CLI::IsMember({"frequency", "time"}));
    add_grid(spectrum);
    add_output(spectrum);

    CLI::App* trig = app.add_subcommand("trig", "fractional sine and cosine with their integrals");
    trig->add_option("--nu", o.nu, "order")->required();
    add_grid(trig);
    add_output(trig);

    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", o.suite, "suite name")
        ->check(CLI::IsMember({"reductions", "cm", "bernstein", "spectra", "reconstruction", "all"}));
    add_output(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream buffer;
    buffer << "# mlein " << MLEIN_VERSION;
    for (const std::string& a : args) buffer << ' ' << a;
    buffer << '\n';

    int status = kOk;
    try {
        if (eval->parsed()) cmd_eval(o, buffer);
        else if (figure->parsed()) cmd_figure(o, buffer);
        else if (creep->parsed()) cmd_creep(o, buffer);
        else if (spectrum->parsed()) cmd_spectrum(o, buffer);
        else if (trig->parsed()) cmd_trig(o, buffer);
        else if (verify->parsed() && !cmd_verify(o, buffer)) status = kVerifyFailed;
    } catch (const UsageError& e) {
        err << "mlein: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "mlein: " << e.what() << '\n';
        return kEvaluation;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        file << buffer.str();
        if (!file) {
            err << "mlein: cannot write " << o.out_path << '\n';
            return kUsage;
        }
    }
    if (status == kVerifyFailed) err << "mlein: verification failed\n";
    return status;
}

}  // namespace mlein::cli
