#include "szego_lab/cli.h"

#include "szego_lab/acceptance.h"
#include "szego_lab/duality.h"
#include "szego_lab/muckenhoupt.h"
#include "szego_lab/norms.h"
#include "szego_lab/report_io.h"
#include "szego_lab/szego.h"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace szego {

namespace {

constexpr double pi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw UsageError(message);
    }
}

// Flat "key = value" file; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        require(eq != std::string::npos, path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::string find_config_path(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) {
            return args[i].substr(9);
        }
    }
    return {};
}

// "re:im" pairs separated by commas, e.g. 0.5:0,-0.3:0.6
std::vector<cplx> parse_points(const std::string& text)
{
    std::vector<cplx> points;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                points.emplace_back(std::stod(item), 0.0);
            } else {
                points.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
            }
        } catch (const std::exception&) {
            throw UsageError("bad point '" + item + "'; expected re:im");
        }
    }
    require(!points.empty(), "no evaluation points given");
    return points;
}

BoundarySamples input_function(const CircleGrid& grid, int mode, int random_degree, std::uint64_t seed)
{
    if (random_degree < 0) {
        return sample(grid, [mode](double t) { return std::polar(1.0, mode * t); });
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    FourierCoeffs c{-random_degree, std::vector<cplx>(static_cast<std::size_t>(2 * random_degree + 1))};
    for (auto& v : c.coeffs) {
        v = cplx(normal(rng), normal(rng));
    }
    return idft(c, grid);
}

struct Options {
    double alpha = 0.5;
    double p = 2.0;
    std::uint64_t seed = 20240611;
    std::string out_path;
    std::string config_path;

    // ap-scan
    std::vector<double> deltas = default_delta_ladder();
    int resolution = 64;
    double half_width = pi / 4;

    // check-all
    std::string only;
    bool corrupt = false;

    // project
    std::size_t n_points = 4096;
    int mode = -1;
    int random_degree = -1;
    std::string points = "0.5:0";
    std::string path = "fourier";
    std::string variant = "corrected";

    // kernel-check, gram
    int pairs = 100;
    int dimension = 64;
    std::string z = "0:0";
    std::string w = "0:0";
    std::string source = "closed";

    // norm-scan
    std::vector<double> coeffs = {1.0};
    std::vector<double> radii = default_radii();

    // blowup
    std::vector<std::size_t> sizes = {512, 1024, 2048, 4096};
    int budget = 20;

    // duality-check, hoelder-fuzz
    int n_tests = 20;
    std::string normalization = "hardy";
    int trials = 1000;
};

void validate_alpha(double alpha) { require(std::isfinite(alpha) && alpha >= 0.0, "--alpha must be finite and >= 0"); }

void validate_p(double p) { require(std::isfinite(p) && p > 1.0, "--p must be finite and > 1"); }

int cmd_interval(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    const BoundednessInterval iv = boundedness_interval(o.alpha);
    JsonObject obj;
    obj.add_raw("q0", format_fixed12(iv.lower));
    if (std::isinf(iv.upper)) {
        obj.add("p0", "inf");
    } else {
        obj.add_raw("p0", format_fixed12(iv.upper));
    }
    out << obj.str() << '\n';
    return exit_pass;
}

int cmd_ap_scan(const Options& o, std::ostream& out, std::ostream& err)
{
    validate_alpha(o.alpha);
    validate_p(o.p);
    require(o.deltas.size() >= 2, "--deltas needs at least two values");
    for (double d : o.deltas) {
        require(d > 0.0 && d < o.half_width, "--deltas must lie in (0, half-width)");
    }
    require(o.resolution >= 64, "--resolution must be >= 64");
    require(o.half_width > 0.0 && o.half_width <= pi, "--half-width must lie in (0, pi]");
    const ApScanReport report = ap_scan(o.alpha, o.p, o.deltas, o.resolution, o.half_width);
    write_ap_scan(out, report);
    if (report.verdict == Classification::Boundary || !report.predicted_slope) {
        err << "warning: p is an endpoint of the boundedness interval; the quotient diverges "
               "logarithmically and no slope is predicted\n";
        return exit_pass;
    }
    const double target = *report.predicted_slope;
    const bool ok = target == 0.0 ? std::abs(report.fitted_slope) <= 0.02
                                  : std::abs(report.fitted_slope - target) <= 0.05 * std::abs(target);
    if (!ok) {
        err << "fitted slope " << format_double(report.fitted_slope) << " does not match predicted "
            << format_double(target) << '\n';
    }
    return ok ? exit_pass : exit_check_failed;
}

int cmd_check_all(const Options& o, std::ostream& out, std::ostream& err)
{
    AcceptanceOptions opts;
    opts.seed = o.seed;
    opts.only = o.only;
    opts.corrupt_tolerances = o.corrupt;
    const std::vector<CheckResult> results = run_acceptance(opts);
    require(!results.empty(), "--only '" + o.only + "' matches no check");

    std::string list = "[";
    const CheckResult* first_bad = nullptr;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CheckResult& r = results[i];
        if (!r.pass && first_bad == nullptr) {
            first_bad = &r;
        }
        JsonObject item;
        item.add("name", r.name)
            .add("criterion", r.criterion)
            .add("residual", r.residual)
            .add("tolerance", r.tolerance)
            .add("pass", r.pass)
            .add("detail", r.detail);
        list += (i > 0 ? ", " : "") + item.str();
    }
    list += "]";
    JsonObject summary;
    summary.add("seed", o.seed).add("n_checks", static_cast<int>(results.size())).add("pass", first_bad == nullptr);
    if (first_bad != nullptr) {
        summary.add("first_failure", first_bad->name);
    } else {
        summary.add_null("first_failure");
    }
    summary.add_raw("checks", list);
    out << summary.str() << '\n';
    if (first_bad != nullptr) {
        err << "check failed: " << first_bad->name << '\n';
        return exit_check_failed;
    }
    return exit_pass;
}

int cmd_project(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    require(o.n_points >= 4, "--n-points must be >= 4");
    const CircleGrid grid(o.n_points);
    const BoundarySamples f = input_function(grid, o.mode, o.random_degree, o.seed);
    const std::vector<cplx> points = parse_points(o.points);
    for (const cplx& z : points) {
        require(std::abs(z) <= 0.9, "evaluation points must satisfy |z| <= 0.9");
    }
    std::vector<cplx> values;
    if (o.path == "fourier") {
        const WeightedHolomorphic h = project_weighted(f, o.alpha);
        for (const cplx& z : points) {
            values.push_back(h(z));
        }
    } else if (o.path == "quadrature") {
        values = project_weighted_quadrature(f, o.alpha, points);
    } else {
        validate_p(o.p);
        values = rescaled_project(f, o.alpha, o.p, points,
                                  o.variant == "literal" ? RescaleVariant::Literal : RescaleVariant::Corrected)
                     .values;
    }
    write_projection_csv(out, points, values);
    return exit_pass;
}

int cmd_kernel_check(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    require(o.pairs >= 1, "--pairs must be positive");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < o.pairs; ++i) {
        const cplx z = std::polar(0.95 * std::sqrt(u(rng)), 2 * pi * u(rng));
        const cplx w = std::polar(0.95 * std::sqrt(u(rng)), 2 * pi * u(rng));
        const cplx lhs = g_alpha(z, o.alpha) * weighted_kernel(z, w, o.alpha).value * std::conj(g_alpha(w, o.alpha));
        worst = std::max(worst, std::abs(lhs - szego_kernel(z, w)));
    }
    const bool pass = worst <= 1e-12;
    JsonObject obj;
    obj.add("alpha", o.alpha).add("pairs", o.pairs).add("seed", o.seed).add("max_residual", worst).add("pass", pass);
    out << obj.str() << '\n';
    return pass ? exit_pass : exit_check_failed;
}

int cmd_gram(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    require(o.dimension >= 1, "--dimension must be positive");
    require(o.source == "closed" || o.source == "quadrature", "--source must be closed or quadrature");
    const cplx z = parse_points(o.z).at(0), w = parse_points(o.w).at(0);
    require(std::abs(z) <= 0.9 && std::abs(w) <= 0.9, "--z and --w must satisfy |z| <= 0.9");
    const GramSystem gram = GramSystem::build(
        o.alpha, o.dimension, o.source == "closed" ? MomentSource::ClosedForm : MomentSource::Quadrature);
    const cplx k = weighted_kernel_via_moments(gram, z, w);
    const cplx exact = weighted_kernel(z, w, o.alpha).value;
    JsonObject obj;
    obj.add("alpha", o.alpha)
        .add("dimension", o.dimension)
        .add("condition_number", gram.condition_number())
        .add("re_kernel", k.real())
        .add("im_kernel", k.imag())
        .add("re_closed_form", exact.real())
        .add("im_closed_form", exact.imag())
        .add("error", std::abs(k - exact));
    out << obj.str() << '\n';
    return exit_pass;
}

int cmd_norm_scan(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    require(std::isfinite(o.p) && o.p >= 1.0, "--p must be finite and >= 1");
    require(!o.coeffs.empty(), "--coeffs must not be empty");
    FourierCoeffs f{0, {}};
    for (double c : o.coeffs) {
        f.coeffs.emplace_back(c, 0.0);
    }
    const std::vector<double> means = radial_means(f, o.alpha, o.p, o.radii);
    out << "r,radial_mean\n";
    for (std::size_t i = 0; i < means.size(); ++i) {
        out << format_double(o.radii[i]) << ',' << format_double(means[i]) << '\n';
    }
    JsonObject footer;
    footer.add("alpha", o.alpha).add("p", o.p).add("hardy_norm", hardy_norm(f, o.alpha, o.p, o.radii));
    out << footer.str() << '\n';
    return exit_pass;
}

int cmd_blowup(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    validate_p(o.p);
    require(o.budget >= 0, "--budget must be >= 0");
    for (std::size_t i = 0; i < o.sizes.size(); ++i) {
        require(o.sizes[i] >= 16, "--sizes entries must be >= 16");
        require(i == 0 || o.sizes[i] > o.sizes[i - 1], "--sizes must be increasing");
    }
    write_blowup(out, blowup_scan(o.alpha, o.p, o.sizes, o.budget, o.seed));
    return exit_pass;
}

int cmd_duality_check(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    validate_p(o.p);
    require(o.n_tests >= 1, "--n-tests must be positive");
    require(o.normalization == "hardy" || o.normalization == "rescaled",
            "--normalization must be hardy or rescaled");
    const CircleGrid grid(o.n_points);
    const int degree = o.random_degree < 0 ? 16 : o.random_degree;
    const BoundarySamples h = input_function(grid, o.mode, degree, o.seed);
    const BoundarySamples f = input_function(grid, o.mode, degree, o.seed + 1);
    const double sa = selfadjoint_residual(f, h, o.alpha);
    const RepresentationReport rep = representation_check(
        h, o.alpha, o.p, o.n_tests, o.seed,
        o.normalization == "hardy" ? DualNormalization::WeightedHardy : DualNormalization::Rescaled);
    const bool pass = rep.pass && sa <= 1e-7;
    out << JsonObject()
               .add("selfadjoint_residual", sa)
               .add_raw("representation", representation_json(rep).str())
               .add("pass", pass)
               .str()
        << '\n';
    return pass ? exit_pass : exit_check_failed;
}

int cmd_hoelder_fuzz(const Options& o, std::ostream& out)
{
    validate_alpha(o.alpha);
    validate_p(o.p);
    require(o.trials >= 1, "--trials must be positive");
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> normal;
    const CircleGrid grid(256);
    double worst = INFINITY;
    for (int t = 0; t < o.trials; ++t) {
        FourierCoeffs a{-6, std::vector<cplx>(13)}, b{-6, std::vector<cplx>(13)};
        for (auto& v : a.coeffs) {
            v = cplx(normal(rng), normal(rng));
        }
        for (auto& v : b.coeffs) {
            v = cplx(normal(rng), normal(rng));
        }
        worst = std::min(worst, hoelder_margin(idft(a, grid), idft(b, grid), o.alpha, o.p));
    }
    const bool pass = worst >= -1e-10;
    out << JsonObject()
               .add("alpha", o.alpha)
               .add("p", o.p)
               .add("trials", o.trials)
               .add("seed", o.seed)
               .add("min_margin", worst)
               .add("pass", pass)
               .str()
        << '\n';
    return pass ? exit_pass : exit_check_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Numerical experiments for weighted Szego projections on the circle", "szego-lab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "write results to this file instead of stdout");
        sub->add_option("--config", o.config_path, "flat key = value file; flags take precedence");
    };
    const auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", o.alpha, "weight parameter alpha"); };
    const auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Lebesgue exponent"); };
    const auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("--n-points", o.n_points, "grid size")->check(CLI::Range(4, 1 << 24));
        sub->add_option("--mode", o.mode, "input e^{i k theta}");
        sub->add_option("--random-degree", o.random_degree, "seeded random trig polynomial instead of --mode");
    };

    std::map<std::string, std::function<int(std::ostream&)>> handlers;

    auto* interval = app.add_subcommand("interval", "endpoints (q0, p0) of the boundedness interval");
    add_alpha(interval);
    add_common(interval);
    handlers["interval"] = [&](std::ostream& dst) { return cmd_interval(o, dst); };

    auto* ap = app.add_subcommand("ap-scan", "regularized A_p quotient scan; CSV + JSON footer");
    add_alpha(ap);
    add_p(ap);
    ap->add_option("--deltas", o.deltas, "clamp ladder")->delimiter(',');
    ap->add_option("--resolution", o.resolution, "quadrature panels per arc");
    ap->add_option("--half-width", o.half_width, "scan arc half-width");
    add_common(ap);
    handlers["ap-scan"] = [&](std::ostream& dst) { return cmd_ap_scan(o, dst, err); };

    auto* check = app.add_subcommand("check-all", "run the acceptance checks; JSON summary");
    add_seed(check);
    check->add_option("--only", o.only, "run checks whose name contains this text");
    check->add_flag("--corrupt-tolerances", o.corrupt, "harness self-test: make every check fail");
    add_common(check);
    handlers["check-all"] = [&](std::ostream& dst) { return cmd_check_all(o, dst, err); };

    auto* project = app.add_subcommand("project", "weighted projection at interior points; CSV");
    add_alpha(project);
    add_p(project);
    add_seed(project);
    add_input(project);
    project->add_option("--points", o.points, "re:im pairs separated by commas");
    project->add_option("--path", o.path, "fourier, quadrature or rescaled")
        ->check(CLI::IsMember({"fourier", "quadrature", "rescaled"}));
    project->add_option("--variant", o.variant, "rescaled transform: corrected or literal")
        ->check(CLI::IsMember({"corrected", "literal"}));
    add_common(project);
    handlers["project"] = [&](std::ostream& dst) { return cmd_project(o, dst); };

    auto* kernel = app.add_subcommand("kernel-check", "closed-form kernel identity on random pairs");
    add_alpha(kernel);
    add_seed(kernel);
    kernel->add_option("--pairs", o.pairs, "number of random pairs");
    add_common(kernel);
    handlers["kernel-check"] = [&](std::ostream& dst) { return cmd_kernel_check(o, dst); };

    auto* gram = app.add_subcommand("gram", "moment-matrix kernel against the closed form");
    add_alpha(gram);
    gram->add_option("--dimension", o.dimension, "number of monomials N");
    gram->add_option("--z", o.z, "first point, re:im");
    gram->add_option("--w", o.w, "second point, re:im");
    gram->add_option("--source", o.source, "closed or quadrature moments");
    add_common(gram);
    handlers["gram"] = [&](std::ostream& dst) { return cmd_gram(o, dst); };

    auto* norm = app.add_subcommand("norm-scan", "radial means and weighted Hardy norm");
    add_alpha(norm);
    add_p(norm);
    norm->add_option("--coeffs", o.coeffs, "real Taylor coefficients c0,c1,...")->delimiter(',');
    norm->add_option("--radii", o.radii, "increasing radii in [0, 1)")->delimiter(',');
    add_common(norm);
    handlers["norm-scan"] = [&](std::ostream& dst) { return cmd_norm_scan(o, dst); };

    auto* blowup = app.add_subcommand("blowup", "operator-norm lower bounds across grid sizes");
    add_alpha(blowup);
    add_p(blowup);
    add_seed(blowup);
    blowup->add_option("--sizes", o.sizes, "increasing grid sizes")->delimiter(',');
    blowup->add_option("--budget", o.budget, "power steps per candidate");
    add_common(blowup);
    handlers["blowup"] = [&](std::ostream& dst) { return cmd_blowup(o, dst); };

    auto* duality = app.add_subcommand("duality-check", "self-adjointness and dual representation");
    add_alpha(duality);
    add_p(duality);
    add_seed(duality);
    add_input(duality);
    duality->add_option("--n-tests", o.n_tests, "random test functions");
    duality->add_option("--normalization", o.normalization, "hardy or rescaled");
    add_common(duality);
    handlers["duality-check"] = [&](std::ostream& dst) { return cmd_duality_check(o, dst); };

    auto* hoelder = app.add_subcommand("hoelder-fuzz", "Hoelder margin over random pairs");
    add_alpha(hoelder);
    add_p(hoelder);
    add_seed(hoelder);
    hoelder->add_option("--trials", o.trials, "number of random pairs");
    add_common(hoelder);
    handlers["hoelder-fuzz"] = [&](std::ostream& dst) { return cmd_hoelder_fuzz(o, dst); };

    try {
        // config values become option defaults, so explicit flags still win
        if (const std::string path = find_config_path(args); !path.empty()) {
            for (const auto& [key, value] : read_config(path)) {
                bool known = false;
                for (CLI::App* sub : app.get_subcommands({})) {
                    if (CLI::Option* opt = sub->get_option_no_throw("--" + key); opt != nullptr) {
                        opt->default_val(value);
                        known = true;
                    }
                }
                require(known, "unknown config key '" + key + "'");
            }
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (o.out_path.empty()) {
            return handlers.at(name)(out);
        }
        std::ofstream file(o.out_path);
        require(file.good(), "cannot write " + o.out_path);
        return handlers.at(name)(file);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
}

} // namespace szego
