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

// Association checks: does a generalized function g_eps, tested against a
// compactly supported T, converge to the action of a distribution (its
// shadow) as (eps, a) shrink along a schedule?

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "mollifier.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "upsilon.hpp"

namespace colombeau
{

enum class Measure
{
    line,       // dr
    spherical,  // 4 pi r^2 dr
};

struct GeneralizedFunction
{
    std::string name;
    std::function<double(const RegularizationPoint&, double)> eval;
};

/// Action <shadow, T>; may depend on the cutoff a (e.g. H(r - a) e / r^2).
struct Shadow
{
    std::string name;
    std::function<double(const RegularizationPoint&, const TestFunction&)> action;
    bool is_zero = false;
};

enum class Verdict
{
    pass,
    above_tolerance,
    non_convergent,
};

inline std::string to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::pass: return "PASS";
        case Verdict::above_tolerance: return "ABOVE_TOLERANCE";
        case Verdict::non_convergent: return "NonConvergent";
    }
    return "?";
}

struct ConvergencePoint
{
    double epsilon = 0.0;
    double a = 0.0;
    double tested = 0.0;    // <g, T>
    double shadow = 0.0;    // <shadow, T>
    double residual = 0.0;  // tested - shadow
};

struct ConvergenceReport
{
    std::string function;
    std::string shadow;
    std::string test_function;
    double tolerance = 0.0;
    double scale = 0.0;
    std::vector<ConvergencePoint> points;
    double decay_order = 0.0;  // fitted p in |residual| ~ eps^p
    Verdict verdict = Verdict::above_tolerance;
};

inline constexpr double assoc_tol = 1e-6;
inline constexpr double tested_rel_tol = 1e-13;

/// Geometric schedule eps_k = eps_start * factor^k with a = ratio * eps.
inline std::vector<RegularizationPoint> geometric_schedule(double eps_start, double eps_stop, int count, double a_over_eps)
{
    std::vector<RegularizationPoint> out;
    for (int k = 0; k < count; ++k)
    {
        const double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
        const double eps = eps_start * std::pow(eps_stop / eps_start, t);
        out.emplace_back(eps, a_over_eps * eps, 1.0 / a_over_eps);
    }
    return out;
}

inline double tested_value(const GeneralizedFunction& g, const RegularizationPoint& rp, const Mollifier& m,
                           const TestFunction& t, Measure measure)
{
    const auto [lo, hi] = transition_band(rp, m);
    const double e = rp.epsilon();
    auto integrand = [&](double r) {
        const double w = measure == Measure::spherical ? 4.0 * std::numbers::pi * r * r : 1.0;
        return g.eval(rp, r) * t(r) * w;
    };
    const auto pts = quad::breakpoints(0.0, t.radius, {lo, rp.a() - 5 * e, rp.a(), rp.a() + 5 * e, hi});
    quad::Options opt;
    opt.rel_tol = tested_rel_tol;
    opt.abs_tol = 1e-300;
    return quad::integrate(integrand, std::span<const double>(pts), opt).value;
}

inline double slope_loglog(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::abs(y[i]) + 1e-300);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

/// Evaluates I = <g - shadow, T> along the schedule (ordered by decreasing eps).
/// PASS needs |I| to decrease monotonically and end below tol * scale;
/// NonConvergent is reported when |I| fails to decrease over the last three points.
/// Residuals at the rounding floor count as converged.
inline ConvergenceReport association_check(const GeneralizedFunction& g, const Shadow& shadow, const TestFunction& t,
                                           const std::vector<RegularizationPoint>& schedule, const Mollifier& m,
                                           Measure measure, double tol = assoc_tol)
{
    if (schedule.size() < 3) throw Error(ErrorCode::InvalidArgument, "association schedule needs at least 3 points");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i].epsilon() < schedule[i - 1].epsilon()))
            throw Error(ErrorCode::InvalidArgument, "schedule must be ordered by decreasing epsilon");

    ConvergenceReport report;
    report.function = g.name;
    report.shadow = shadow.name;
    report.test_function = t.name;
    report.tolerance = tol;
    report.points = parallel_map(schedule.size(), [&](std::size_t i) {
        const auto& rp = schedule[i];
        ConvergencePoint p;
        p.epsilon = rp.epsilon();
        p.a = rp.a();
        p.tested = tested_value(g, rp, m, t, measure);
        p.shadow = shadow.is_zero ? 0.0 : shadow.action(rp, t);
        p.residual = p.tested - p.shadow;
        return p;
    });

    const auto& last = report.points.back();
    report.scale = std::abs(shadow.is_zero ? last.tested : last.shadow);

    // Residuals below ten times the quadrature tolerance are noise in the tested value.
    const double noise = 10.0 * tested_rel_tol * report.scale;
    std::vector<double> eps, res;
    for (const auto& p : report.points)
    {
        if (std::abs(p.residual) <= noise) continue;
        eps.push_back(p.epsilon);
        res.push_back(p.residual);
    }
    report.decay_order = res.size() >= 2 ? slope_loglog(eps, res) : 0.0;

    const auto& pts = report.points;
    const std::size_t n = pts.size();
    auto decreased = [&](std::size_t i) {
        return std::abs(pts[i].residual) <= noise || std::abs(pts[i].residual) < std::abs(pts[i - 1].residual);
    };
    const bool tail_decreasing = decreased(n - 1) && decreased(n - 2);
    bool monotone = true;
    for (std::size_t i = 1; i < n; ++i) monotone = monotone && decreased(i);
    const double final_residual = std::abs(pts.back().residual);

    if (!tail_decreasing)
        report.verdict = Verdict::non_convergent;
    else if (monotone && final_residual < tol * report.scale)
        report.verdict = Verdict::pass;
    else
        report.verdict = Verdict::above_tolerance;
    return report;
}

/// The three worked association cases: the embedded Coulomb field, the
/// point-charge density, and the non-associable square of the delta.
struct AssociationCase
{
    std::string name;
    GeneralizedFunction g;
    Shadow shadow;
    Measure measure;
    Verdict expected;
    std::vector<RegularizationPoint> schedule;
};

inline AssociationCase coulomb_field_case(const Mollifier& m, double charge = 1.0)
{
    AssociationCase c;
    c.name = "coulomb-field";
    c.g = {"E_eps = e (r^-2 Y - r^-1 Y')", [&m, charge](const RegularizationPoint& rp, double r) {
               return charge * (upsilon(rp, m, r, 0) / (r * r) - upsilon(rp, m, r, 1) / r);
           }};
    c.shadow = {"e H(r - a) / r^2", [charge](const RegularizationPoint& rp, const TestFunction& t) {
                    auto f = [&](double r) { return 4.0 * std::numbers::pi * charge * t(r); };
                    quad::Options opt;
                    opt.rel_tol = 1e-14;
                    return quad::integrate(f, rp.a(), t.radius, opt).value;
                }};
    c.measure = Measure::spherical;
    c.expected = Verdict::pass;
    c.schedule = geometric_schedule(1e-3, 1e-10, 8, 100.0);
    return c;
}

inline AssociationCase charge_density_case(const Mollifier& m, double charge = 1.0)
{
    AssociationCase c;
    c.name = "charge-density";
    c.g = {"rho_eps = -(e/4pi) r^-1 Y''", [&m, charge](const RegularizationPoint& rp, double r) {
               return -charge / (4.0 * std::numbers::pi) * upsilon(rp, m, r, 2) / r;
           }};
    c.shadow = {"e delta^3", [charge](const RegularizationPoint&, const TestFunction& t) { return charge * t(0.0); }};
    c.measure = Measure::spherical;
    c.expected = Verdict::pass;
    c.schedule = geometric_schedule(1e-3, 1e-10, 8, 100.0);
    return c;
}

inline AssociationCase delta_squared_case(const Mollifier& m)
{
    AssociationCase c;
    c.name = "delta-squared";
    c.g = {"(Y')^2", [&m](const RegularizationPoint& rp, double r) {
               const double d = upsilon(rp, m, r, 1);
               return d * d;
           }};
    c.shadow = {"0", {}, true};
    c.measure = Measure::line;
    c.expected = Verdict::non_convergent;
    c.schedule = geometric_schedule(1e-3, 1e-6, 4, 100.0);
    return c;
}

inline AssociationCase association_case(const std::string& name, const Mollifier& m)
{
    if (name == "coulomb-field") return coulomb_field_case(m);
    if (name == "charge-density") return charge_density_case(m);
    if (name == "delta-squared") return delta_squared_case(m);
    throw Error(ErrorCode::InvalidArgument, "unknown association case '" + name + "'");
}

}  // namespace colombeau
