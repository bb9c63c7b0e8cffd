// Copyright 2026 The colombeau-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with string streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "association.hpp"
#include "asymptotic.hpp"
#include "electrodynamics.hpp"
#include "error.hpp"
#include "mollifier.hpp"
#include "parallel.hpp"
#include "renorm.hpp"
#include "report.hpp"
#include "reproduce.hpp"

namespace colombeau::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Geometric grid "start:stop[:count]".
struct Grid
{
    double start = 0.0;
    double stop = 0.0;
    int count = 7;

    std::vector<double> values() const
    {
        std::vector<double> out;
        for (int k = 0; k < count; ++k)
        {
            const double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
            out.push_back(start * std::pow(stop / start, t));
        }
        return out;
    }
};

inline Grid parse_grid(const std::string& text)
{
    Grid g;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3)
        throw Error(ErrorCode::InvalidArgument, "grid '" + text + "' must be start:stop[:count]");
    try
    {
        g.start = std::stod(parts[0]);
        g.stop = std::stod(parts[1]);
        if (parts.size() == 3) g.count = std::stoi(parts[2]);
    }
    catch (const std::exception&)
    {
        throw Error(ErrorCode::InvalidArgument, "grid '" + text + "' is not numeric");
    }
    if (!(g.start > 0.0 && g.stop > 0.0) || g.count < 1)
        throw Error(ErrorCode::InvalidArgument, "grid '" + text + "' needs positive bounds and count");
    return g;
}

struct RunConfig
{
    int q = 2;
    double eps = 1e-3;
    double a = 1e-1;
    std::string unit_mode = "gaussian";
    double moment_tol = colombeau::moment_tol;
    double assoc_tol = colombeau::assoc_tol;
    double fit_tol = 2e-2;
    double ratio_max = 1e-2;
    std::string output;
};

namespace detail
{

inline UnitMode unit_mode(const RunConfig& cfg)
{
    return cfg.unit_mode == "natural" ? UnitMode::natural : UnitMode::gaussian;
}

inline void write(std::ostream& out, const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open output file '" + cfg.output + "'");
    file << text;
}

inline Format format(bool json, bool csv)
{
    if (json && csv) throw Error(ErrorCode::InvalidArgument, "--json and --csv are exclusive");
    return json ? Format::json : csv ? Format::csv : Format::text;
}

// ---------------------------------------------------------------------------

inline int cmd_mollifier(const RunConfig& cfg, bool json, std::ostream& out)
{
    const auto m = build_mollifier(cfg.q);
    const auto closed = moment_table(m, 4, 6, MomentMethod::closed_form);
    const auto quad = moment_table(m, 4, 6, MomentMethod::quadrature);
    bool ok = std::abs(m.total_mass() - 1.0) <= cfg.moment_tol;
    for (int k = 1; k <= cfg.q; ++k) ok = ok && std::abs(moment(m, 1, k, MomentMethod::quadrature)) <= cfg.moment_tol;

    if (json)
    {
        nlohmann::ordered_json j;
        j["q"] = cfg.q;
        j["coefficients"] = std::vector<double>(m.coefficients().begin(), m.coefficients().end());
        j["support_cutoff"] = m.support_cutoff();
        j["total_mass"] = m.total_mass();
        auto rows = nlohmann::ordered_json::array();
        for (int p = 1; p <= 4; ++p)
            for (int n = 0; n <= 6; ++n)
                rows.push_back({{"m", p}, {"n", n}, {"closed_form", closed(p, n)}, {"quadrature", quad(p, n)}});
        j["moments"] = rows;
        j["vanishing_moments_ok"] = ok;
        detail::write(out, cfg, j.dump(2) + "\n");
    }
    else
    {
        std::ostringstream os;
        os << "mollifier q=" << cfg.q << "  eta(z) = P(z) exp(-z^2)\n";
        const auto c = m.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) os << "  c" << 2 * k << " = " << format_double(c[k]) << "\n";
        os << "  support cutoff Z = " << short_double(m.support_cutoff()) << "\n";
        os << "  int eta = " << format_double(m.total_mass()) << "\n\n";
        std::vector<std::vector<std::string>> rows{{"m", "n", "M[m,n] closed", "M[m,n] quadrature"}};
        for (int p = 1; p <= 4; ++p)
            for (int n = 0; n <= 6; ++n)
                rows.push_back({std::to_string(p), std::to_string(n), format_double(closed(p, n)),
                                format_double(quad(p, n))});
        os << aligned_table(rows);
        os << (ok ? "vanishing moments: ok\n" : "vanishing moments: FAILED\n");
        detail::write(out, cfg, os.str());
    }
    return ok ? exit_ok : exit_failed;
}

struct MomentRow
{
    double eps, a, quadrature, asymptotic, rel_dev;
    bool pass;
};

inline int cmd_moments(const RunConfig& cfg, int n, const std::vector<std::string>& sweep, const std::string& csv_path,
                       bool json, std::ostream& out, std::ostream& err)
{
    const auto m = build_mollifier(cfg.q);
    std::optional<Grid> eps_grid, a_grid;
    std::optional<double> a_ratio;
    for (const auto& item : sweep)
    {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "sweep item '" + item + "' lacks '='");
        const auto key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "eps")
            eps_grid = parse_grid(value);
        else if (key == "a")
            a_grid = parse_grid(value);
        else if (key == "a-ratio")
            a_ratio = std::stod(value);
        else
            throw Error(ErrorCode::InvalidArgument, "unknown sweep key '" + key + "'");
    }
    if (!eps_grid) eps_grid = Grid{1e-5, 1e-2, 7};
    if (!a_grid && !a_ratio) a_ratio = 100.0;
    if (a_grid && a_ratio) throw Error(ErrorCode::InvalidArgument, "give either a= or a-ratio=, not both");

    const auto series = Mn_moment(n, m);  // throws for n = 3
    const std::optional<double> r_max = n >= 3 ? std::optional<double>(1.0) : std::nullopt;
    const auto closed = r_max ? integrate_asymptotic(coulomb_moment_integrand(n), m, r_max) : series;
    const auto integrand = coulomb_moment_integrand(n);

    std::vector<std::pair<double, double>> points;
    for (double eps : eps_grid->values())
    {
        const std::vector<double> as = a_grid ? a_grid->values() : std::vector<double>{*a_ratio * eps};
        for (double a : as)
        {
            if (a >= 1.0 || eps / a > cfg.ratio_max || eps >= a)
            {
                err << "warning: skipping eps=" << short_double(eps) << " a=" << short_double(a)
                    << " (need a < 1 and eps/a <= " << short_double(cfg.ratio_max) << ")\n";
                continue;
            }
            points.emplace_back(eps, a);
        }
    }
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "sweep grid has no admissible (eps, a) point");

    const auto rows = parallel_map(points.size(), [&](std::size_t i) {
        const auto [eps, a] = points[i];
        const RegularizationPoint rp(eps, a, cfg.ratio_max);
        RadialQuadratureOptions opt;
        opt.r_max = r_max;
        const double qv = integrate_quadrature(integrand, rp, m, opt);
        const double cv = closed.eval(rp);
        const double dev = relative_deviation(qv, cv);
        return MomentRow{eps, a, qv, cv, dev, dev <= error_model(rp)};
    });

    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass;

    std::optional<AsymptoticSeries> fit;
    if (a_grid && eps_grid->count > 1 && a_grid->count > 1)
    {
        std::vector<Sample> samples;
        for (const auto& r : rows) samples.push_back({r.eps, r.a, r.quadrature});
        std::vector<Exponents> basis;
        for (int j = -1; j <= 2; ++j) basis.emplace_back(n - 3 - j, j);
        if (r_max) basis.emplace_back(0, 0);
        try
        {
            fit = fit_asymptotics(samples, basis);
            const double lead = fit->coefficient(n - 2, -1), lead_ref = series.coefficient(n - 2, -1);
            ok = ok && relative_deviation(lead, lead_ref) <= cfg.fit_tol;
            const double sub = fit->coefficient(n - 3, 0), sub_ref = series.coefficient(n - 3, 0);
            ok = ok && (sub_ref == 0.0 ? std::abs(sub) <= cfg.fit_tol * std::abs(lead_ref)
                                       : relative_deviation(sub, sub_ref) <= cfg.fit_tol);
        }
        catch (const Error& e)
        {
            err << "warning: no fit: " << e.what() << "\n";
        }
    }

    if (!csv_path.empty())
    {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open '" + csv_path + "'");
        file << csv_row({"eps", "a", "quadrature", "asymptotic", "rel_dev", "pass"});
        for (const auto& r : rows)
            file << csv_row({format_double(r.eps), format_double(r.a), format_double(r.quadrature),
                             format_double(r.asymptotic), format_double(r.rel_dev), r.pass ? "true" : "false"});
    }

    if (json)
    {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["q"] = cfg.q;
        j["closed_form"] = closed.str();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"eps", r.eps}, {"a", r.a}, {"quadrature", r.quadrature}, {"asymptotic", r.asymptotic},
                           {"rel_dev", r.rel_dev}, {"pass", r.pass}});
        j["rows"] = arr;
        if (fit) j["fit"] = fit->str();
        j["pass"] = ok;
        detail::write(out, cfg, j.dump(2) + "\n");
    }
    else
    {
        std::ostringstream os;
        os << "M_" << n << " = int r^" << n << " E^2 dr ~ " << closed.str() << "\n";
        std::vector<std::vector<std::string>> table{{"eps", "a", "quadrature", "asymptotic", "rel dev", "pass"}};
        for (const auto& r : rows)
            table.push_back({short_double(r.eps), short_double(r.a), format_double(r.quadrature),
                             format_double(r.asymptotic), short_double(r.rel_dev), r.pass ? "PASS" : "FAIL"});
        os << aligned_table(table);
        if (fit) os << "fit: " << fit->str() << "\n";
        detail::write(out, cfg, os.str());
    }
    return ok ? exit_ok : exit_failed;
}

inline nlohmann::ordered_json to_json(const ConvergenceReport& r)
{
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : r.points)
        pts.push_back({{"eps", p.epsilon}, {"a", p.a}, {"tested", p.tested}, {"shadow", p.shadow},
                       {"residual", p.residual}});
    return {{"function", r.function}, {"shadow", r.shadow}, {"test_function", r.test_function},
            {"tolerance", r.tolerance}, {"scale", r.scale}, {"decay_order", r.decay_order},
            {"verdict", to_string(r.verdict)}, {"points", pts}};
}

inline int cmd_associate(const RunConfig& cfg, const std::string& name, bool json, std::ostream& out)
{
    const auto m = build_mollifier(cfg.q);
    const auto c = association_case(name, m);
    const auto bank = test_functions::bank();
    const auto reports = parallel_map(bank.size(), [&](std::size_t i) {
        return association_check(c.g, c.shadow, bank[i], c.schedule, m, c.measure, cfg.assoc_tol);
    });
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.verdict == c.expected;

    if (json)
    {
        nlohmann::ordered_json j;
        j["case"] = c.name;
        j["expected"] = to_string(c.expected);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        j["reports"] = arr;
        j["pass"] = ok;
        detail::write(out, cfg, j.dump(2) + "\n");
        return ok ? exit_ok : exit_failed;
    }
    std::ostringstream os;
    os << "case " << c.name << "  (expected " << to_string(c.expected) << ")\n";
    for (const auto& r : reports)
    {
        os << "\n" << r.function << "  vs  " << r.shadow << "  on " << r.test_function << "\n";
        std::vector<std::vector<std::string>> table{{"eps", "a", "tested", "shadow", "residual"}};
        for (const auto& p : r.points)
            table.push_back({short_double(p.epsilon), short_double(p.a), format_double(p.tested),
                             format_double(p.shadow), short_double(p.residual)});
        os << aligned_table(table);
        os << "decay order " << short_double(r.decay_order) << "  verdict " << to_string(r.verdict) << "\n";
    }
    detail::write(out, cfg, os.str());
    return ok ? exit_ok : exit_failed;
}

inline int cmd_reproduce(const RunConfig& cfg, const ReproduceConfig& physics, Format f, std::ostream& out)
{
    auto rc = physics;
    rc.q = cfg.q;
    rc.eps = cfg.eps;
    rc.a = cfg.a;
    rc.unit_mode = unit_mode(cfg);
    rc.ratio_max = cfg.ratio_max;
    rc.moment_tol = cfg.moment_tol;
    const auto report = reproduce(rc);
    detail::write(out, cfg, emit_report(report, f));
    return report.all_pass() ? exit_ok : exit_failed;
}

inline int cmd_renorm(const RunConfig& cfg, double s, double g, double mass, bool json, std::ostream& out,
                      std::ostream& err)
{
    const auto m = build_mollifier(cfg.q);
    RenormInput in;
    in.m = mass;
    in.s = s;
    in.g = g;
    in.M20 = moment(m, 2, 0);
    const auto sol = renormalize(in);
    for (const auto& w : sol.warnings) err << "warning: " << w << "\n";
    const auto rt = roundtrip_check(in, sol, m);
    const bool ok = !rt.quadrature_evaluated || rt.quadrature_ok;

    if (json)
    {
        nlohmann::ordered_json j;
        j["input"] = {{"m", in.m}, {"s", in.s}, {"g", in.g}, {"hbar", in.hbar}, {"c", in.c}, {"alpha", in.alpha},
                      {"M20", in.M20}, {"q", cfg.q}};
        j["solution"] = {{"a", sol.a},         {"epsilon", sol.epsilon}, {"mu", sol.mu},
                         {"U_ele", sol.U_ele}, {"U_mag", sol.U_mag},     {"ratio", sol.ratio}};
        j["warnings"] = sol.warnings;
        j["roundtrip"] = {{"mc2_closed", rt.mc2_closed},
                          {"spin_closed", rt.spin_closed},
                          {"rel_mc2_closed", rt.rel_mc2_closed},
                          {"rel_spin_closed", rt.rel_spin_closed},
                          {"quadrature_evaluated", rt.quadrature_evaluated},
                          {"mc2_quadrature", rt.mc2_quadrature},
                          {"spin_quadrature", rt.spin_quadrature},
                          {"rel_mc2_quadrature", rt.rel_mc2_quadrature},
                          {"rel_spin_quadrature", rt.rel_spin_quadrature},
                          {"quadrature_tolerance", rt.quadrature_tolerance},
                          {"pass", ok}};
        detail::write(out, cfg, j.dump(2) + "\n");
        return ok ? exit_ok : exit_failed;
    }
    std::vector<std::vector<std::string>> rows{
        {"a", format_double(sol.a), "hbar/mc"},
        {"epsilon", format_double(sol.epsilon), "hbar/mc"},
        {"eps/a", format_double(sol.ratio), ""},
        {"mu", format_double(sol.mu), "e hbar/mc"},
        {"U_ele", format_double(sol.U_ele), "mc^2"},
        {"U_mag", format_double(sol.U_mag), "mc^2"},
        {"mc^2 (closed)", format_double(rt.mc2_closed), "rel " + short_double(rt.rel_mc2_closed)},
        {"|S| (closed)", format_double(rt.spin_closed), "rel " + short_double(rt.rel_spin_closed)},
    };
    if (rt.quadrature_evaluated)
    {
        rows.push_back({"mc^2 (quadrature)", format_double(rt.mc2_quadrature), "rel " + short_double(rt.rel_mc2_quadrature)});
        rows.push_back({"|S| (quadrature)", format_double(rt.spin_quadrature), "rel " + short_double(rt.rel_spin_quadrature)});
    }
    std::ostringstream os;
    os << "renormalization  s=" << short_double(s) << " g=" << short_double(g) << " m=" << short_double(mass)
       << " q=" << cfg.q << "  (hbar = c = 1, alpha = " << short_double(in.alpha) << ")\n";
    os << aligned_table(rows);
    if (!rt.quadrature_evaluated) os << "quadrature round trip skipped: a >= 1\n";
    os << (ok ? "round trip: ok\n" : "round trip: FAILED\n");
    detail::write(out, cfg, os.str());
    return ok ? exit_ok : exit_failed;
}

struct SweepRow
{
    double eps, a;
    double ue_quad, ue_closed, um_quad, um_closed, spin_quad, spin_closed;
    bool pass;
};

inline int cmd_sweep(const RunConfig& cfg, const ReproduceConfig& physics, const std::string& eps_spec,
                     const std::string& a_spec, Format f, std::ostream& out, std::ostream& err)
{
    const auto eps_grid = parse_grid(eps_spec).values();
    const auto a_grid = parse_grid(a_spec).values();
    if (*std::max_element(eps_grid.begin(), eps_grid.end()) >= *std::min_element(a_grid.begin(), a_grid.end()))
        throw Error(ErrorCode::InvalidArgument, "eps grid must lie below the a grid");

    auto rc = physics;
    rc.unit_mode = unit_mode(cfg);
    const auto p = physical_params(rc);
    const auto m = build_mollifier(cfg.q);

    std::vector<std::pair<double, double>> points;
    for (double eps : eps_grid)
        for (double a : a_grid)
        {
            if (a >= 1.0 || eps / a > cfg.ratio_max)
            {
                err << "warning: skipping eps=" << short_double(eps) << " a=" << short_double(a) << "\n";
                continue;
            }
            points.emplace_back(eps, a);
        }
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "sweep grid has no admissible (eps, a) point");

    const auto rows = parallel_map(points.size(), [&](std::size_t i) {
        const RegularizationPoint rp(points[i].first, points[i].second, cfg.ratio_max);
        const auto ue = self_energy_electric(p, m, rp);
        const auto um = self_energy_magnetic(p, m, rp);
        const auto s = spin(p, m, rp);
        const Vec3 axis = p.mu.normalized();
        SweepRow row{rp.epsilon(), rp.a(), ue.quadrature, ue.closed_value, um.quadrature, um.closed_value,
                     s.total.quadrature.dot(axis), s.total.closed_value.dot(axis), false};
        const double tol = error_model(rp);
        row.pass = relative_deviation(row.ue_quad, row.ue_closed) <= tol &&
                   relative_deviation(row.um_quad, row.um_closed) <= tol &&
                   relative_deviation(row.spin_quad, row.spin_closed) <= tol;
        return row;
    });
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass;

    const std::vector<std::string> header{"eps",       "a",          "U_ele_quadrature", "U_ele_closed", "U_mag_quadrature",
                                          "U_mag_closed", "spin_quadrature", "spin_closed", "pass"};
    auto cells = [](const SweepRow& r) {
        return std::vector<std::string>{format_double(r.eps),       format_double(r.a),
                                        format_double(r.ue_quad),   format_double(r.ue_closed),
                                        format_double(r.um_quad),   format_double(r.um_closed),
                                        format_double(r.spin_quad), format_double(r.spin_closed),
                                        r.pass ? "true" : "false"};
    };
    std::string text;
    if (f == Format::csv)
    {
        text = csv_row(header);
        for (const auto& r : rows) text += csv_row(cells(r));
    }
    else if (f == Format::json)
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"eps", r.eps}, {"a", r.a}, {"U_ele_quadrature", r.ue_quad}, {"U_ele_closed", r.ue_closed},
                           {"U_mag_quadrature", r.um_quad}, {"U_mag_closed", r.um_closed},
                           {"spin_quadrature", r.spin_quad}, {"spin_closed", r.spin_closed}, {"pass", r.pass}});
        nlohmann::ordered_json j{{"q", cfg.q}, {"unit_mode", cfg.unit_mode}, {"rows", arr}, {"pass", ok}};
        text = j.dump(2) + "\n";
    }
    else
    {
        std::vector<std::vector<std::string>> table{header};
        for (const auto& r : rows) table.push_back(cells(r));
        text = aligned_table(table);
    }
    detail::write(out, cfg, text);
    return ok ? exit_ok : exit_failed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"colombeau_kit: Upsilon-function calculus for the point electron", "colombeau_kit"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; flags override it");

    RunConfig cfg;
    app.add_option("--q", cfg.q, "mollifier order (even, >= 2)")->capture_default_str();
    app.add_option("--eps", cfg.eps, "regularization width")->capture_default_str();
    app.add_option("--a", cfg.a, "radial cutoff")->capture_default_str();
    app.add_option("--unit", cfg.unit_mode, "unit mode")->check(CLI::IsMember({"gaussian", "natural"}))->capture_default_str();
    app.add_option("--moment-tol", cfg.moment_tol)->capture_default_str();
    app.add_option("--assoc-tol", cfg.assoc_tol)->capture_default_str();
    app.add_option("--fit-tol", cfg.fit_tol)->capture_default_str();
    app.add_option("--ratio-max", cfg.ratio_max, "largest admissible eps/a")->capture_default_str();
    app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");

    auto* mollifier = app.add_subcommand("mollifier", "coefficients and moment table")->fallthrough();
    bool mollifier_json = false;
    mollifier->add_flag("--json", mollifier_json);

    auto* moments = app.add_subcommand("moments", "M_n = int r^n E^2 dr: quadrature against asymptotics")->fallthrough();
    int moment_n = 2;
    std::vector<std::string> sweep{"eps=1e-5:1e-2", "a-ratio=100"};
    std::string moments_csv;
    bool moments_json = false;
    moments->add_option("--n", moment_n, "radial power")->capture_default_str();
    moments->add_option("--sweep", sweep, "eps=start:stop[:count] and a-ratio=R or a=start:stop[:count]")
        ->expected(1, 2);
    moments->add_option("--csv", moments_csv, "also write the table as CSV");
    moments->add_flag("--json", moments_json);

    auto* associate = app.add_subcommand("associate", "association checks of the worked cases")->fallthrough();
    std::string case_name;
    bool associate_json = false;
    associate->add_option("--case", case_name)
        ->required()
        ->check(CLI::IsMember({"coulomb-field", "charge-density", "delta-squared"}));
    associate->add_flag("--json", associate_json);

    ReproduceConfig physics;
    auto add_physics = [&](CLI::App* sub) {
        sub->add_option("--e", physics.e, "charge (gaussian units)")->capture_default_str();
        sub->add_option("--mu", physics.mu, "magnetic moment magnitude along z")->capture_default_str();
        sub->add_option("--c", physics.c, "speed of light (gaussian units)")->capture_default_str();
    };

    auto* reproduce_cmd = app.add_subcommand("reproduce", "every closed form against quadrature")->fallthrough();
    bool reproduce_json = false, reproduce_csv = false;
    reproduce_cmd->add_flag("--json", reproduce_json);
    reproduce_cmd->add_flag("--csv", reproduce_csv);
    add_physics(reproduce_cmd);

    auto* renorm = app.add_subcommand("renorm", "solve for (a, eps) from mass and spin")->fallthrough();
    double s = 0.5, g = 2.0, mass = 1.0;
    bool renorm_json = false;
    renorm->add_option("--s", s, "spin quantum number")->capture_default_str();
    renorm->add_option("--g", g, "gyromagnetic ratio")->capture_default_str();
    renorm->add_option("--m", mass, "mass (hbar = c = 1)")->capture_default_str();
    renorm->add_flag("--json", renorm_json);

    auto* sweep_cmd = app.add_subcommand("sweep", "energies and spin over an (eps, a) grid")->fallthrough();
    std::string eps_spec = "1e-5:1e-3:3", a_spec = "1e-2:1e-1:2";
    bool sweep_json = false, sweep_csv = false;
    sweep_cmd->add_option("--eps-grid", eps_spec)->capture_default_str();
    sweep_cmd->add_option("--a-grid", a_spec)->capture_default_str();
    sweep_cmd->add_flag("--json", sweep_json);
    sweep_cmd->add_flag("--csv", sweep_csv);
    add_physics(sweep_cmd);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*mollifier) return detail::cmd_mollifier(cfg, mollifier_json, out);
        if (*moments) return detail::cmd_moments(cfg, moment_n, sweep, moments_csv, moments_json, out, err);
        if (*associate) return detail::cmd_associate(cfg, case_name, associate_json, out);
        if (*reproduce_cmd)
            return detail::cmd_reproduce(cfg, physics, detail::format(reproduce_json, reproduce_csv), out);
        if (*renorm) return detail::cmd_renorm(cfg, s, g, mass, renorm_json, out, err);
        if (*sweep_cmd)
            return detail::cmd_sweep(cfg, physics, eps_spec, a_spec, detail::format(sweep_json, sweep_csv), out, err);
    }
    catch (const Error& e)
    {
        err << e.what() << "\n";
        const bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::InvalidOrder;
        if (usage) err << app.help();
        return usage ? exit_usage : exit_failed;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}

}  // namespace colombeau::cli
