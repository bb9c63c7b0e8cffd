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

// The end-to-end reproduction suite: every closed form against quadrature at
// one regularization point.

#include <cmath>
#include <numbers>
#include <string>

#include "electrodynamics.hpp"
#include "mollifier.hpp"
#include "report.hpp"
#include "upsilon.hpp"

namespace colombeau
{

struct ReproduceConfig
{
    int q = 2;
    double eps = 1e-3;
    double a = 1e-1;
    UnitMode unit_mode = UnitMode::gaussian;
    double e = 1.0;  // ignored in natural mode
    double mu = 1.0;
    double c = 1.0;  // ignored in natural mode
    double ratio_max = 1e-2;
    double moment_tol = colombeau::moment_tol;
};

/// Relative error budget of the finite-(eps, a) quadrature against the
/// leading closed forms.
inline double error_model(const RegularizationPoint& rp) { return 3.0 * (rp.ratio() + rp.a()); }

inline PhysicalParams physical_params(const ReproduceConfig& cfg)
{
    const Vec3 mu(0.0, 0.0, cfg.mu);
    return cfg.unit_mode == UnitMode::natural ? PhysicalParams::natural(mu) : PhysicalParams::gaussian(cfg.e, mu, cfg.c);
}

inline Report reproduce(const ReproduceConfig& cfg)
{
    const auto m = build_mollifier(cfg.q);
    const RegularizationPoint rp(cfg.eps, cfg.a, cfg.ratio_max);
    const auto p = physical_params(cfg);
    const double e = p.e, mu = p.mu.norm(), c = p.c, a = rp.a(), eps = rp.epsilon();
    const double M20 = moment(m, 2, 0);
    const double tol = error_model(rp);
    const double pi = std::numbers::pi;

    Report r;
    r.meta = {cfg.q, eps, a, to_string(cfg.unit_mode), version};
    auto& out = r.checks;

    out.push_back(make_check("mollifier_mass", "int eta dz = 1", 1.0,
                             moment(m, 1, 0, MomentMethod::quadrature), cfg.moment_tol));
    out.push_back(make_check("moment_M20", "M[2,0] = int eta^2 dz", M20, moment(m, 2, 0, MomentMethod::quadrature),
                             1e-9));

    const auto fields = build_fields(p);
    const auto e2 = dot(fields.E, fields.E) * (1.0 / (8.0 * pi));
    const auto h2 = dot(fields.H, fields.H) * (1.0 / (8.0 * pi));

    const auto ue = self_energy_electric(p, m, rp);
    out.push_back(make_check("self_energy_electric", "U_ele = (e^2/2) M[2,0]/eps", e * e / 2.0 * M20 / eps,
                             ue.quadrature, tol));
    const double ue_classical = integrate_volume_quadrature(upsilon_squared_part(e2), rp, m).scalar;
    out.push_back(make_check("self_energy_electric_classical", "Y^2 part = e^2/(2a)", e * e / (2.0 * a), ue_classical,
                             3.0 * rp.ratio()));

    const auto um = self_energy_magnetic(p, m, rp);
    out.push_back(make_check("self_energy_magnetic", "U_mag = (mu^2/3) M[2,0]/(a^2 eps)",
                             mu * mu / 3.0 * M20 / (a * a * eps), um.quadrature, tol));
    const double um_classical = integrate_volume_quadrature(upsilon_squared_part(h2), rp, m).scalar;
    out.push_back(make_check("self_energy_magnetic_classical", "Y^2 part = mu^2/(3 a^3)", mu * mu / (3.0 * a * a * a),
                             um_classical, 3.0 * rp.ratio()));

    auto total_density = e2;
    total_density += h2;
    out.push_back(make_check("self_energy_total", "U = U_ele + U_mag", ue.closed_value + um.closed_value,
                             integrate_volume_quadrature(total_density, rp, m).scalar, tol));

    const Vec3 flux = delta_term_flux(p, m, rp);
    out.push_back(make_check("delta_flux", "int u x (mu x u) r^-2 Y' d^3r = (8 pi/3) mu", 8.0 * pi / 3.0 * mu,
                             flux.dot(p.mu.normalized()), 1e-6));

    const auto div_h = divergence(fields.H);
    out.push_back(make_check("div_H_terms", "div H = 0 term by term", 0.0,
                             static_cast<double>(div_h.terms().size()), 0.0, 1.0));

    const auto force = self_force(p, m, rp);
    const double fr_formula = e * e * (M20 / (a * eps) - 1.0 / (2.0 * a * a));
    out.push_back(make_check("self_force_total", "F = int (rho E + j x H / c) d^3r = 0", 0.0,
                             force.total_quadrature.norm(), 1e-12, std::abs(force.radial_density.quadrature)));
    out.push_back(make_check("self_force_radial", "F_r = e^2 (M[2,0]/(a eps) - 1/(2 a^2))", fr_formula,
                             force.radial_density.quadrature, 1e-2));

    const auto mom = self_momentum(p, m, rp);
    const double p_scale = std::abs(mom.radial.quadrature) * mu / (std::abs(e) * c);
    out.push_back(make_check("self_momentum_total", "P = (1/4 pi c) int E x H d^3r = 0", 0.0,
                             mom.total.quadrature.norm(), 1e-12, p_scale));
    out.push_back(make_check("self_momentum_radial", "P_r = e^2 (M[2,0]/(a eps) - 1/(2 a^2))", fr_formula,
                             mom.radial.quadrature, 1e-2));

    const auto s = spin(p, m, rp);
    const double s_formula = 2.0 * e * mu / (3.0 * c) * M20 / eps;
    out.push_back(make_check("spin", "S = (2 e mu/3c) M[2,0]/eps", s_formula, s.total.quadrature.dot(p.mu.normalized()),
                             tol));

    if (mu > 0.0)
    {
        auto flipped = p;
        flipped.mu = -p.mu;
        const auto s_flip = spin(flipped, m, rp);
        out.push_back(make_check("spin_parity", "S(-mu) = -S(mu)", s.total.quadrature.dot(p.mu.normalized()),
                                 -s_flip.total.quadrature.dot(p.mu.normalized()), 1e-12));
        const auto um_flip = self_energy_magnetic(flipped, m, rp);
        out.push_back(make_check("energy_parity", "U_mag(-mu) = U_mag(mu)", um.quadrature, um_flip.quadrature, 1e-12));
    }
    return r;
}

}  // namespace colombeau
