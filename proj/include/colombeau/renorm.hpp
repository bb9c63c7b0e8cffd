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

// Finite (a, eps) that reproduce a given mass and spin, from the closed forms
//   U_ele = (e^2/2) M20 / eps,  U_mag = (mu^2/3) M20 / (a^2 eps),
//   S = (2 e mu / 3c) M20 / eps,  mu = g s e hbar / (2 m c).

#include <cmath>
#include <string>
#include <vector>

#include "electrodynamics.hpp"
#include "error.hpp"
#include "mollifier.hpp"
#include "upsilon.hpp"

namespace colombeau
{

inline constexpr double g_min = 1.5;
inline constexpr double renorm_ratio_warn = 0.1;

struct RenormInput
{
    double m = 1.0;  // rest energy mc^2 in units where c appears explicitly below
    double s = 0.5;
    double g = 2.0;
    double hbar = 1.0;
    double c = 1.0;
    double alpha = fine_structure;
    double M20 = 0.0;

    double charge() const { return std::sqrt(alpha * hbar * c); }
    /// Compton length hbar / (m c) with m the mass.
    double compton() const { return hbar / (m * c); }
    double rest_energy() const { return m * c * c; }
};

struct GVerdict
{
    bool feasible = false;
    double mu2_over_e2a2 = 0.0;  // (3/2)(2g/3 - 1)
};

/// mc^2 = (2/3) g U_ele with U_mag >= 0 forces g >= 3/2.
inline GVerdict g_constraint(double g)
{
    if (!(g > 0.0)) throw Error(ErrorCode::InvalidArgument, "g must be positive");
    if (g < g_min)
        throw Error(ErrorCode::InfeasibleG, "g = " + std::to_string(g) + " is below 3/2; U_mag would be negative");
    return {true, 1.5 * (2.0 * g / 3.0 - 1.0)};
}

struct RenormSolution
{
    double a = 0.0;
    double epsilon = 0.0;
    double mu = 0.0;
    double U_ele = 0.0;
    double U_mag = 0.0;
    double ratio = 0.0;
    std::vector<std::string> warnings;
};

inline RenormSolution renormalize(const RenormInput& in)
{
    if (!(in.m > 0.0)) throw Error(ErrorCode::InvalidArgument, "mass must be positive");
    if (!(in.s > 0.0)) throw Error(ErrorCode::InvalidArgument, "spin must be positive");
    if (!(in.hbar > 0.0 && in.c > 0.0 && in.alpha > 0.0))
        throw Error(ErrorCode::InvalidArgument, "hbar, c and alpha must be positive");
    if (!(in.M20 > 0.0)) throw Error(ErrorCode::InvalidArgument, "M20 must be positive");
    const auto verdict = g_constraint(in.g);
    const double e = in.charge();
    const double mc2 = in.rest_energy();

    RenormSolution sol;
    sol.mu = in.g * in.s * e * in.hbar / (2.0 * in.m * in.c);
    sol.U_ele = 3.0 * mc2 / (2.0 * in.g);
    sol.U_mag = mc2 - sol.U_ele;
    sol.epsilon = e * e * in.M20 / (2.0 * sol.U_ele);
    if (verdict.mu2_over_e2a2 == 0.0)
        throw Error(ErrorCode::InfeasibleG, "g = 3/2 needs mu = 0, which contradicts s > 0");
    sol.a = sol.mu / (e * std::sqrt(verdict.mu2_over_e2a2));
    sol.ratio = sol.epsilon / sol.a;
    if (sol.ratio > renorm_ratio_warn)
    {
        sol.warnings.push_back("RatioViolation: eps/a = " + std::to_string(sol.ratio) + " exceeds " +
                               std::to_string(renorm_ratio_warn));
    }
    return sol;
}

struct RoundTripReport
{
    double mc2_closed = 0.0;
    double spin_closed = 0.0;
    double mc2_quadrature = 0.0;
    double spin_quadrature = 0.0;
    double rel_mc2_closed = 0.0;
    double rel_spin_closed = 0.0;
    double rel_mc2_quadrature = 0.0;
    double rel_spin_quadrature = 0.0;
    double quadrature_tolerance = 0.0;
    bool quadrature_evaluated = false;  // needs a < 1
    bool quadrature_ok = false;
};

inline constexpr double roundtrip_tol = 1e-10;

/// Feeds the solved (a, eps) back through the field closed forms and the
/// quadrature route. Throws RoundTripFailure when the closed forms miss.
inline RoundTripReport roundtrip_check(const RenormInput& in, const RenormSolution& sol, const Mollifier& m)
{
    const double e = in.charge();
    const auto params = PhysicalParams{e, Vec3(0.0, 0.0, sol.mu), in.c, UnitMode::natural};
    const auto fields = build_fields(params);
    const auto energy_density = (dot(fields.E, fields.E) += dot(fields.H, fields.H)) * (1.0 / (8.0 * std::numbers::pi));
    const auto spin_density =
        position_cross(cross(fields.E, fields.H)) * (1.0 / (4.0 * std::numbers::pi * in.c));

    RoundTripReport rep;
    rep.mc2_closed = integrate_volume_asymptotic(energy_density, m).eval(sol.a, sol.epsilon);
    rep.spin_closed = integrate_volume_asymptotic_vector(spin_density, m).eval(sol.a, sol.epsilon).norm();
    const double target_e = in.rest_energy();
    const double target_s = in.s * in.hbar;
    rep.rel_mc2_closed = std::abs(rep.mc2_closed - target_e) / target_e;
    rep.rel_spin_closed = std::abs(rep.spin_closed - target_s) / target_s;

    if (sol.a < 1.0)
    {
        const RegularizationPoint rp(sol.epsilon, sol.a, 1.0);
        rep.mc2_quadrature = integrate_volume_quadrature(energy_density, rp, m).scalar;
        rep.spin_quadrature = integrate_volume_quadrature(spin_density, rp, m).vector.norm();
        rep.rel_mc2_quadrature = std::abs(rep.mc2_quadrature - target_e) / target_e;
        rep.rel_spin_quadrature = std::abs(rep.spin_quadrature - target_s) / target_s;
        rep.quadrature_evaluated = true;
        rep.quadrature_tolerance = 3.0 * (sol.ratio + sol.a);
        rep.quadrature_ok =
            rep.rel_mc2_quadrature <= rep.quadrature_tolerance && rep.rel_spin_quadrature <= rep.quadrature_tolerance;
    }

    if (!(rep.rel_mc2_closed <= roundtrip_tol) || !(rep.rel_spin_closed <= roundtrip_tol))
    {
        throw Error(ErrorCode::RoundTripFailure, "closed-form round trip misses: mc^2 rel " +
                                                     std::to_string(rep.rel_mc2_closed) + ", spin rel " +
                                                     std::to_string(rep.rel_spin_closed));
    }
    return rep;
}

}  // namespace colombeau
