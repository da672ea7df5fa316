#include "tclass/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tclass/classt.hpp"
#include "tclass/error.hpp"
#include "tclass/geometry.hpp"
#include "tclass/io.hpp"
#include "tclass/oracle.hpp"

namespace tclass::cli {

namespace {

using io::Json;

constexpr double kDefaultTolerance = 1e-9;

// Flags shared by all verbs; each verb registers the subset it uses.
struct Options {
    std::string series_path;
    std::string params_path;
    std::string format = "json";
    int kmax = kDefaultKmax;
    double tol = kDefaultTolerance;
    std::vector<double> rho{0.0};
    std::vector<double> r;
    std::optional<double> c;
    std::optional<double> eta;
    std::optional<int> k;
    int i = 0;
    std::string kind;
    bool full_scan = false;
    bool verify = false;
    int angles = 256;
    std::vector<double> grid_radii;
    std::vector<double> real_axis;
    bool real_axis_given = false;
    std::string dump_path;
};

struct Report {
    Json json;
    std::string csv;
    int exit_code = kOk;
};

// CSV cells use the same 10-digit rounding as JSON.
std::string cell(double x) {
    const Json v = io::number(x);
    return v.is_null() ? std::string() : v.dump();
}

std::string cell(bool b) { return b ? "true" : "false"; }

NegCoeffSeries load_series(const Options& o) { return io::series_from_json(io::read_json_file(o.series_path)); }
ClassParams load_params(const Options& o) { return io::params_from_json(io::read_json_file(o.params_path)); }

void check_common(const Options& o, const ClassParams& p) {
    if (!(o.tol > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "--tol must be > 0");
    if (o.kmax < p.j + 2) {
        throw Error(ErrorCode::ParameterOutOfRange, "--kmax must be at least j + 2");
    }
}

ScanOptions scan_options(const Options& o) { return ScanOptions{o.kmax, o.full_scan}; }

Report run_check(const Options& o) {
    const NegCoeffSeries f = load_series(o);
    const ClassParams p = load_params(o);
    check_common(o, p);
    const Deficiency d = deficiency(f, p);
    return {io::to_json(d), "sigma,member\n" + cell(d.sigma) + "," + cell(d.member) + "\n",
            d.member ? kOk : kConditionFailed};
}

Report run_extremal(const Options& o) {
    const ClassParams p = load_params(o);
    check_common(o, p);
    const int k = o.k.value_or(p.j + 1);
    const NegCoeffSeries f = extremal(k, p);
    std::ostringstream csv;
    csv << "k,a_k\n" << k << "," << cell(f.coefficient(k)) << "\n";
    return {io::series_to_json(f), csv.str()};
}

Report run_decompose(const Options& o) {
    const NegCoeffSeries f = load_series(o);
    const ClassParams p = load_params(o);
    check_common(o, p);
    const Decomposition d = decompose(f, p);
    std::ostringstream csv;
    csv << "k,mu\n" << p.j << "," << cell(d.mu_j) << "\n";
    for (const auto& [k, mu] : d.mus) csv << k << "," << cell(mu) << "\n";
    return {io::to_json(d), csv.str()};
}

Report run_radii(const Options& o) {
    const ClassParams p = load_params(o);
    check_common(o, p);
    std::vector<RadiusKind> kinds{RadiusKind::close_to_convex, RadiusKind::starlike,
                                  RadiusKind::convex};
    if (!o.kind.empty()) kinds = {io::radius_kind_from_string(o.kind)};

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "kind,rho,value,attained_k\n";
    for (RadiusKind kind : kinds) {
        for (double rho : o.rho) {
            const RadiusResult r = radius(kind, p, rho, scan_options(o));
            Json row = io::to_json(kind, r);
            row["rho"] = io::number(rho);
            rows.push_back(std::move(row));
            csv << io::to_string(kind) << "," << cell(rho) << "," << cell(r.value) << ","
                << r.attained_k << "\n";
        }
    }
    if (rows.size() == 1) rows[0].erase("rho");
    return {rows.size() == 1 ? rows[0] : rows, csv.str()};
}

Report run_distortion(const Options& o) {
    const ClassParams p = load_params(o);
    check_common(o, p);
    if (o.r.empty()) throw Error(ErrorCode::InvalidInput, "--r is required");
    std::optional<NegCoeffSeries> f;
    if (o.verify) {
        if (o.series_path.empty()) {
            throw Error(ErrorCode::InvalidInput, "--verify needs --series");
        }
        f = load_series(o);
    }

    Report report;
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "r,i,lower,upper,vacuous_lower" << (f ? ",min_abs,max_abs,inside" : "") << "\n";
    for (double r : o.r) {
        const DistortionEnvelope env = distortion_envelope(p, o.i, r);
        Json row = io::to_json(env);
        csv << cell(r) << "," << o.i << "," << cell(env.lower) << "," << cell(env.upper) << ","
            << cell(env.vacuous_lower);
        if (f) {
            const DistortionExtremes ext = distortion_extremes(*f, o.i, r, p.mode, o.angles);
            const bool inside = ext.min_abs >= env.lower - o.tol && ext.max_abs <= env.upper + o.tol;
            row["oracle"] = Json{{"min_abs", io::number(ext.min_abs)},
                                 {"max_abs", io::number(ext.max_abs)},
                                 {"inside", inside}};
            csv << "," << cell(ext.min_abs) << "," << cell(ext.max_abs) << "," << cell(inside);
            if (!inside) report.exit_code = kConditionFailed;
        }
        csv << "\n";
        rows.push_back(std::move(row));
    }
    report.json = rows.size() == 1 ? rows[0] : rows;
    report.csv = csv.str();
    return report;
}

Report run_product(const Options& o) {
    const ClassParams p = load_params(o);
    check_common(o, p);
    if (o.kind.empty()) throw Error(ErrorCode::InvalidInput, "--kind is required");
    const ProductParamResult r =
        product_parameter(io::product_kind_from_string(o.kind), p, o.eta, o.kmax);
    std::ostringstream csv;
    csv << "kind,printed,derived,attained_k,feasible\n"
        << io::to_string(r.kind) << "," << cell(r.printed_value) << ","
        << (r.derived_value ? cell(*r.derived_value) : "") << ","
        << (r.attained_k ? std::to_string(*r.attained_k) : "") << "," << cell(r.feasible) << "\n";
    return {io::to_json(r), csv.str()};
}

Report run_transform(const Options& o) {
    const NegCoeffSeries f = load_series(o);
    if (!o.c) throw Error(ErrorCode::InvalidInput, "--c is required");
    const NegCoeffSeries g = bernardi(f, *o.c);
    Json out{{"series", io::series_to_json(g)}};
    std::ostringstream csv;
    csv << "k,b_k\n";
    for (const auto& [k, b] : g.terms()) csv << k << "," << cell(b) << "\n";
    if (!o.params_path.empty()) {
        const ClassParams p = load_params(o);
        check_common(o, p);
        const RadiusResult r = bernardi_univalence_radius(p, *o.c, scan_options(o));
        Json radius = io::to_json(RadiusKind::close_to_convex, r);
        radius.erase("kind");
        out["univalence_radius"] = std::move(radius);
    }
    return {std::move(out), csv.str()};
}

Report run_verify(const Options& o) {
    const NegCoeffSeries f = load_series(o);
    if (!(o.tol > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "--tol must be > 0");
    const std::string what = o.kind.empty() ? "membership" : o.kind;
    const double rho = o.rho.empty() ? 0.0 : o.rho.front();

    std::vector<SampleRecord> samples;
    std::vector<SampleRecord>* dump = o.dump_path.empty() ? nullptr : &samples;
    MarginReport m;
    if (what == "membership") {
        const ClassParams p = load_params(o);
        check_common(o, p);
        SampleGrid grid = SampleGrid::default_grid();
        grid.angles = o.angles;
        if (!o.grid_radii.empty()) grid.radii = o.grid_radii;
        if (o.real_axis_given) grid.real_axis_refinement = o.real_axis;
        m = membership_margin(f, p, grid, dump);
    } else {
        if (o.r.size() != 1) throw Error(ErrorCode::InvalidInput, "--r takes exactly one radius here");
        if (what == "univalence") {
            const NegCoeffSeries g = o.c ? bernardi(f, *o.c) : f;
            m = transform_univalence_margin(g, o.r.front(), o.angles, dump);
        } else {
            m = geometry_margin(io::radius_kind_from_string(what), f, rho, o.r.front(), o.angles,
                                dump);
        }
    }

    if (dump) {
        std::ofstream file(o.dump_path);
        if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + o.dump_path);
        file << "re,im,value,degenerate\n";
        for (const SampleRecord& s : samples) {
            file << cell(s.z.real()) << "," << cell(s.z.imag()) << "," << cell(s.value) << ","
                 << cell(s.degenerate) << "\n";
        }
    }
    const bool holds = m.margin >= -o.tol;
    std::ostringstream csv;
    csv << "margin,worst_re,worst_im,degenerate_samples\n"
        << cell(m.margin) << "," << cell(m.worst_z.real()) << "," << cell(m.worst_z.imag()) << ","
        << m.degenerate_samples << "\n";
    return {io::to_json(m), csv.str(), holds ? kOk : kConditionFailed};
}

void write_error(std::ostream& err, std::string_view code, const std::string& detail) {
    err << io::dump(Json{{"error", std::string(code)}, {"detail", detail}}) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficient criteria, radii and disc-sampling checks for classes of "
                 "analytic functions with negative coefficients",
                 "tclass"};
    app.require_subcommand(1);
    Options o;

    auto add_series = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--series", o.series_path, "series JSON file");
        if (required) opt->required();
    };
    auto add_params = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--params", o.params_path, "class parameters JSON file");
        if (required) opt->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--kmax", o.kmax, "largest index scanned");
        sub->add_option("--tol", o.tol, "tolerance for predicates");
    };

    auto* check = app.add_subcommand("check", "coefficient criterion sigma and membership");
    add_series(check, true);
    add_params(check, true);
    add_common(check);

    auto* extremal_cmd = app.add_subcommand("extremal", "single-term extremal function");
    add_params(extremal_cmd, true);
    add_common(extremal_cmd);
    extremal_cmd->add_option("--k", o.k, "index of the extremal term (default j+1)");

    auto* decompose_cmd = app.add_subcommand("decompose", "extreme-point weights of a member");
    add_series(decompose_cmd, true);
    add_params(decompose_cmd, true);
    add_common(decompose_cmd);

    auto* radii = app.add_subcommand("radii", "radii of close-to-convexity, starlikeness, convexity");
    add_params(radii, true);
    add_common(radii);
    radii->add_option("--rho", o.rho, "order(s) rho in [0,1)")->delimiter(',');
    radii->add_option("--kind", o.kind, "close_to_convex, starlike or convex (default all)");
    radii->add_flag("--full-scan", o.full_scan, "disable the early-stop rule");

    auto* distortion = app.add_subcommand("distortion", "distortion envelope of I^i f");
    add_params(distortion, true);
    add_series(distortion, false);
    add_common(distortion);
    distortion->add_option("--i", o.i, "operator power i in [0,n]");
    distortion->add_option("--r", o.r, "radius or radii in [0,1)")->required()->delimiter(',');
    distortion->add_flag("--verify", o.verify, "compare with sampled extremes of --series");
    distortion->add_option("--angles", o.angles, "angles per circle for --verify");

    auto* product = app.add_subcommand("product", "Hadamard-product class parameter");
    add_params(product, true);
    add_common(product);
    product->add_option("--kind", o.kind, "gamma, xi, delta or alpha")->required();
    product->add_option("--eta", o.eta, "second class parameter (xi only)");

    auto* transform = app.add_subcommand("transform", "Bernardi transform and univalence radius");
    add_series(transform, true);
    add_params(transform, false);
    add_common(transform);
    transform->add_option("--c", o.c, "transform parameter c > -1")->required();
    transform->add_flag("--full-scan", o.full_scan, "disable the early-stop rule");

    auto* verify = app.add_subcommand("verify", "disc-sampling margin of an analytic condition");
    add_series(verify, true);
    add_params(verify, false);
    add_common(verify);
    verify->add_option("--kind", o.kind,
                       "membership (default), close_to_convex, starlike, convex or univalence");
    verify->add_option("--rho", o.rho, "order rho for geometric conditions");
    verify->add_option("--r", o.r, "circle radius for geometric conditions");
    verify->add_option("--c", o.c, "apply the Bernardi transform first (univalence)");
    verify->add_option("--angles", o.angles, "angles per circle");
    verify->add_option("--grid-radii", o.grid_radii, "membership grid radii")->delimiter(',');
    auto* real_axis = verify->add_option("--real-axis", o.real_axis, "membership real-axis points")
                          ->delimiter(',');
    verify->add_option("--dump", o.dump_path, "write per-sample values as CSV");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        o.real_axis_given = real_axis->count() > 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, to_string(ErrorCode::InvalidInput), e.what());
        return kInvalid;
    }

    try {
        Report report;
        if (check->parsed()) report = run_check(o);
        else if (extremal_cmd->parsed()) report = run_extremal(o);
        else if (decompose_cmd->parsed()) report = run_decompose(o);
        else if (radii->parsed()) report = run_radii(o);
        else if (distortion->parsed()) report = run_distortion(o);
        else if (product->parsed()) report = run_product(o);
        else if (transform->parsed()) report = run_transform(o);
        else report = run_verify(o);

        if (o.format == "csv") out << report.csv;
        else out << io::dump(report.json) << "\n";
        return report.exit_code;
    } catch (const Error& e) {
        write_error(err, to_string(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        write_error(err, to_string(ErrorCode::InvalidInput), e.what());
    }
    return kInvalid;
}

}  // namespace tclass::cli
