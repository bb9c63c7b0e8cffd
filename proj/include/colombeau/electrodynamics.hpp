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

// Fields of a point electron (electric pole + magnetic dipole) in the
// Upsilon algebra, kept as sums of (angular factor) x (radial profile), and
// the dynamical quantities obtained by integrating them over R^3.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "angular.hpp"
#include "asymptotic.hpp"
#include "error.hpp"
#include "mollifier.hpp"
#include "radial.hpp"
#include "upsilon.hpp"

namespace colombeau
{

inline constexpr double fine_structure = 1.0 / 137.035999;

enum class UnitMode
{
    gaussian,
    natural,
};

inline std::string to_string(UnitMode mode) { return mode == UnitMode::gaussian ? "gaussian" : "natural"; }

struct PhysicalParams
{
    double e = 1.0;
    Vec3 mu = Vec3(0.0, 0.0, 1.0);
    double c = 1.0;
    UnitMode unit_mode = UnitMode::gaussian;

    static PhysicalParams gaussian(double e, const Vec3& mu, double c)
    {
        if (e == 0.0) throw Error(ErrorCode::InvalidArgument, "charge must be nonzero");
        if (!(c > 0.0)) throw Error(ErrorCode::InvalidArgument, "speed of light must be positive");
        return {e, mu, c, UnitMode::gaussian};
    }

    /// c = hbar = 1, e = sqrt(alpha).
    static PhysicalParams natural(const Vec3& mu) { return {std::sqrt(fine_structure), mu, 1.0, UnitMode::natural}; }
};

// ---------------------------------------------------------------------------
// Factored fields

struct FieldTerm
{
    AngularExpression angular;
    RadialExpression radial;
};

/// Sum of angular x radial products, canonicalized so that every radial
/// monomial appears once with unit coefficient.
class Field
{
public:
    Field(const Vec3& mu, bool is_vector) : mu_(mu), vector_(is_vector) {}

    Field(const Vec3& mu, bool is_vector, const std::vector<FieldTerm>& terms) : Field(mu, is_vector)
    {
        for (const auto& t : terms) add(t.angular, t.radial);
    }

    bool is_vector() const noexcept { return vector_; }
    const Vec3& mu() const noexcept { return mu_; }
    const std::vector<FieldTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const AngularExpression& angular, const RadialExpression& radial)
    {
        if (angular.is_vector() != vector_) throw Error(ErrorCode::InvalidArgument, "field kind mismatch");
        for (const auto& rt : radial.terms())
        {
            const auto unit = RadialExpression::monomial(1.0, rt.p, rt.alpha, rt.beta, rt.gamma);
            auto ang = angular * rt.coeff;
            auto it = std::find_if(terms_.begin(), terms_.end(), [&](const FieldTerm& f) { return f.radial == unit; });
            if (it == terms_.end())
                terms_.push_back({ang, unit});
            else
                it->angular += ang;
        }
        std::erase_if(terms_, [](const FieldTerm& f) { return f.angular.is_zero(); });
        std::sort(terms_.begin(), terms_.end(), [](const FieldTerm& x, const FieldTerm& y) {
            return x.radial.terms().front().key() < y.radial.terms().front().key();
        });
    }

    Field& operator+=(const Field& o)
    {
        for (const auto& t : o.terms_) add(t.angular, t.radial);
        return *this;
    }

    Field operator*(double s) const
    {
        Field out(mu_, vector_);
        for (const auto& t : terms_) out.add(t.angular * s, t.radial);
        return out;
    }

    /// Angular factor multiplying a given radial monomial (zero if absent).
    AngularExpression angular_of(int p, int alpha, int beta, int gamma) const
    {
        const auto unit = RadialExpression::monomial(1.0, p, alpha, beta, gamma);
        for (const auto& t : terms_)
            if (t.radial == unit) return t.angular;
        return vector_ ? AngularExpression::vector(mu_, {}, {}, {}) : AngularExpression::scalar(mu_, {});
    }

    Vec3 eval_vector(const RegularizationPoint& rp, const Mollifier& m, const Vec3& r) const
    {
        const double rn = r.norm();
        const Vec3 u = r / rn;
        Vec3 out = Vec3::Zero();
        for (const auto& t : terms_) out += t.angular.eval_vector(u) * t.radial.eval(rp, m, rn);
        return out;
    }

    double eval_scalar(const RegularizationPoint& rp, const Mollifier& m, const Vec3& r) const
    {
        const double rn = r.norm();
        const Vec3 u = r / rn;
        double out = 0.0;
        for (const auto& t : terms_) out += t.angular.eval_scalar(u) * t.radial.eval(rp, m, rn);
        return out;
    }

private:
    Vec3 mu_;
    bool vector_;
    std::vector<FieldTerm> terms_;
};

namespace detail
{

inline TPoly derivative(const TPoly& p)
{
    TPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(static_cast<double>(k) * p[k]);
    return poly::trim(out);
}

// Angular parts of the differential operators: for S(u), V(u) depending on
// direction only, grad S = G/r, div V = D/r, curl V = C/r.
inline AngularExpression angular_gradient(const AngularExpression& s)
{
    const TPoly ds = derivative(s.scalar_part());
    return AngularExpression::vector(s.mu(), poly::scale(poly::mul(poly::t1, ds), -1.0), ds, {});
}

inline AngularExpression angular_divergence(const AngularExpression& v)
{
    const double m2 = v.mu().squaredNorm();
    const TPoly m2_minus_t2 = {m2, 0.0, -1.0};
    return AngularExpression::scalar(
        v.mu(), poly::add(poly::scale(v.u_part(), 2.0), poly::mul(derivative(v.mu_part()), m2_minus_t2)));
}

inline AngularExpression angular_curl(const AngularExpression& v)
{
    const double m2 = v.mu().squaredNorm();
    const TPoly t2_minus_m2 = {-m2, 0.0, 1.0};
    const TPoly& h = v.cross_part();
    TPoly cu = poly::add(poly::mul(derivative(h), t2_minus_m2), poly::mul(poly::t1, h));
    TPoly cx = poly::add(derivative(v.u_part()), poly::mul(poly::t1, derivative(v.mu_part())));
    return AngularExpression::vector(v.mu(), cu, h, cx);
}

}  // namespace detail

/// grad(S R) = u S R' + G R / r
inline Field gradient(const Field& f)
{
    if (f.is_vector()) throw Error(ErrorCode::InvalidArgument, "gradient needs a scalar field");
    Field out(f.mu(), true);
    const auto u = AngularExpression::u(f.mu());
    for (const auto& t : f.terms())
    {
        out.add(t.angular * u, differentiate(t.radial));
        out.add(detail::angular_gradient(t.angular), t.radial.shifted(-1));
    }
    return out;
}

/// div(V R) = (u . V) R' + D R / r
inline Field divergence(const Field& f)
{
    if (!f.is_vector()) throw Error(ErrorCode::InvalidArgument, "divergence needs a vector field");
    Field out(f.mu(), false);
    const auto u = AngularExpression::u(f.mu());
    for (const auto& t : f.terms())
    {
        out.add(dot(u, t.angular), differentiate(t.radial));
        out.add(detail::angular_divergence(t.angular), t.radial.shifted(-1));
    }
    return out;
}

/// curl(V R) = (u x V) R' + C R / r
inline Field curl(const Field& f)
{
    if (!f.is_vector()) throw Error(ErrorCode::InvalidArgument, "curl needs a vector field");
    Field out(f.mu(), true);
    const auto u = AngularExpression::u(f.mu());
    for (const auto& t : f.terms())
    {
        out.add(cross(u, t.angular), differentiate(t.radial));
        out.add(detail::angular_curl(t.angular), t.radial.shifted(-1));
    }
    return out;
}

inline Field dot(const Field& x, const Field& y)
{
    Field out(x.mu(), false);
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) out.add(dot(s.angular, t.angular), s.radial * t.radial);
    return out;
}

inline Field cross(const Field& x, const Field& y)
{
    Field out(x.mu(), true);
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) out.add(cross(s.angular, t.angular), s.radial * t.radial);
    return out;
}

/// Scalar field times vector field.
inline Field multiply(const Field& scalar, const Field& vec)
{
    Field out(vec.mu(), true);
    for (const auto& s : scalar.terms())
        for (const auto& t : vec.terms()) out.add(s.angular * t.angular, s.radial * t.radial);
    return out;
}

/// r x V = r (u x V)
inline Field position_cross(const Field& f)
{
    Field out(f.mu(), true);
    const auto u = AngularExpression::u(f.mu());
    for (const auto& t : f.terms()) out.add(cross(u, t.angular), t.radial.shifted(1));
    return out;
}

// ---------------------------------------------------------------------------
// Field bundle

struct FieldBundle
{
    Field potential;         // e Y / r
    Field vector_potential;  // (mu x u) Y / r^2
    Field E;
    Field H;
    Field rho;
    Field j;
};

/// Derives E = -grad phi, H = curl A, rho = div E / 4 pi, j = c curl H / 4 pi
/// from phi = e Y / r and A = Y (mu x r) / r^3.
inline FieldBundle build_fields(const PhysicalParams& p)
{
    Field phi(p.mu, false);
    phi.add(AngularExpression::constant(p.mu, p.e), RadialExpression::monomial(1.0, -1, 1));
    Field a(p.mu, true);
    a.add(AngularExpression::mu_cross_u(p.mu), RadialExpression::monomial(1.0, -2, 1));

    const Field e = gradient(phi) * -1.0;
    const Field h = curl(a);
    const Field rho = divergence(e) * (1.0 / (4.0 * std::numbers::pi));
    const Field j = curl(h) * (p.c / (4.0 * std::numbers::pi));
    return {phi, a, e, h, rho, j};
}

// ---------------------------------------------------------------------------
// Volume integrals

struct VectorSeries
{
    std::map<Exponents, Vec3> coeffs;

    Vec3 eval(double a, double eps) const
    {
        Vec3 sum = Vec3::Zero();
        for (const auto& [k, c] : coeffs) sum += c * std::pow(a, k.first) * std::pow(eps, k.second);
        return sum;
    }

    Vec3 eval(const RegularizationPoint& rp) const { return eval(rp.a(), rp.epsilon()); }

    /// Component along a direction, as a scalar series.
    AsymptoticSeries along(const Vec3& direction) const
    {
        AsymptoticSeries out;
        const Vec3 d = direction.normalized();
        for (const auto& [k, c] : coeffs)
            if (c.dot(d) != 0.0) out.coeffs[k] = c.dot(d);
        return out;
    }
};

/// int_R3 f d^3r by sphere quadrature x radial quadrature.
inline SphereIntegral integrate_volume_quadrature(const Field& f, const RegularizationPoint& rp, const Mollifier& m,
                                                  const SphereRule& rule = SphereRule::product())
{
    SphereIntegral out;
    out.is_vector = f.is_vector();
    for (const auto& t : f.terms())
    {
        const auto ang = sphere_integrate_quadrature(t.angular, rule);
        const double rad = integrate_quadrature(t.radial.shifted(2), rp, m);
        out.scalar += ang.scalar * rad;
        out.vector += ang.vector * rad;
    }
    return out;
}

/// Closed form of int_R3 f d^3r: exact angular table x radial asymptotics.
/// Terms whose angular integral vanishes identically are skipped, so their
/// radial part never has to be reducible.
inline AsymptoticSeries integrate_volume_asymptotic(const Field& f, const Mollifier& m)
{
    if (f.is_vector()) throw Error(ErrorCode::InvalidArgument, "use integrate_volume_asymptotic_vector");
    AsymptoticSeries out;
    for (const auto& t : f.terms())
    {
        const double ang = sphere_integrate_exact(t.angular).scalar;
        if (ang == 0.0) continue;
        const auto rad = integrate_asymptotic(eliminate_second_derivative(t.radial.shifted(2)), m);
        for (const auto& [k, c] : rad.coeffs) out.coeffs[k] += ang * c;
        out.notes.insert(out.notes.end(), rad.notes.begin(), rad.notes.end());
    }
    // Cancelling contributions leave rounding residue; drop it.
    double largest = 0.0;
    for (const auto& [k, c] : out.coeffs) largest = std::max(largest, std::abs(c));
    std::erase_if(out.coeffs, [&](const auto& kv) { return std::abs(kv.second) <= 1e-13 * largest; });
    return out;
}

inline VectorSeries integrate_volume_asymptotic_vector(const Field& f, const Mollifier& m)
{
    if (!f.is_vector()) throw Error(ErrorCode::InvalidArgument, "use integrate_volume_asymptotic");
    VectorSeries out;
    for (const auto& t : f.terms())
    {
        const Vec3 ang = sphere_integrate_exact(t.angular).vector;
        if (ang.isZero(0.0)) continue;
        const auto rad = integrate_asymptotic(eliminate_second_derivative(t.radial.shifted(2)), m);
        for (const auto& [k, c] : rad.coeffs)
        {
            auto [it, inserted] = out.coeffs.try_emplace(k, Vec3::Zero());
            it->second += ang * c;
        }
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.isZero(0.0); });
    return out;
}

// ---------------------------------------------------------------------------
// Dynamical quantities

struct ScalarQuantity
{
    AsymptoticSeries closed_form;
    double closed_value = 0.0;
    double quadrature = 0.0;

    double rel_dev() const { return std::abs(quadrature - closed_value) / std::abs(closed_value); }
};

struct VectorQuantity
{
    VectorSeries closed_form;
    Vec3 closed_value = Vec3::Zero();
    Vec3 quadrature = Vec3::Zero();
};

/// U_ele = (1/8 pi) int E^2 d^3r
inline ScalarQuantity self_energy_electric(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    const auto density = dot(fields.E, fields.E) * (1.0 / (8.0 * std::numbers::pi));
    ScalarQuantity q;
    q.closed_form = integrate_volume_asymptotic(density, m);
    q.closed_value = q.closed_form.eval(rp);
    q.quadrature = integrate_volume_quadrature(density, rp, m).scalar;
    return q;
}

/// U_mag = (1/8 pi) int H^2 d^3r
inline ScalarQuantity self_energy_magnetic(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    const auto density = dot(fields.H, fields.H) * (1.0 / (8.0 * std::numbers::pi));
    ScalarQuantity q;
    q.closed_form = integrate_volume_asymptotic(density, m);
    q.closed_value = q.closed_form.eval(rp);
    q.quadrature = integrate_volume_quadrature(density, rp, m).scalar;
    return q;
}

/// The pure Y^2 part of an energy density (what survives when Y' -> 0).
inline Field upsilon_squared_part(const Field& density)
{
    Field out(density.mu(), density.is_vector());
    for (const auto& t : density.terms())
    {
        const auto& rt = t.radial.terms().front();
        if (rt.alpha == 2 && rt.beta == 0 && rt.gamma == 0) out.add(t.angular, t.radial);
    }
    return out;
}

/// Volume integral of the H field's Y' term alone: (8 pi / 3) mu.
inline Vec3 delta_term_flux(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    Field delta_part(p.mu, true);
    for (const auto& t : fields.H.terms())
        if (t.radial.terms().front().beta == 1) delta_part.add(t.angular, t.radial);
    return integrate_volume_quadrature(delta_part, rp, m).vector;
}

/// Radial profile of |E| (the coefficient of u in E).
inline RadialExpression electric_radial(const FieldBundle& fields)
{
    RadialExpression e_r;
    for (const auto& t : fields.E.terms()) e_r += t.radial * t.angular.u_part().at(0);
    return e_r;
}

struct ForceResult
{
    Vec3 total_quadrature = Vec3::Zero();
    Vec3 total_closed = Vec3::Zero();
    Vec3 electric_total = Vec3::Zero();
    Vec3 magnetic_total = Vec3::Zero();
    ScalarQuantity radial_density;  // F_r = int r^2 (div E) E dr
};

/// Total self-force int (rho E + j x H) d^3r and the electric radial density.
inline ForceResult self_force(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    const auto electric = multiply(fields.rho, fields.E);
    const auto magnetic = cross(fields.j, fields.H);
    ForceResult out;
    out.electric_total = integrate_volume_quadrature(electric, rp, m).vector;
    out.magnetic_total = integrate_volume_quadrature(magnetic, rp, m).vector;
    out.total_quadrature = out.electric_total + out.magnetic_total;
    out.total_closed = integrate_volume_asymptotic_vector(electric, m).eval(rp);
    // The magnetic force density is odd in u: every angular factor integrates to zero.
    for (const auto& t : magnetic.terms())
        if (!sphere_integrate_exact(t.angular).vector.isZero(0.0))
            throw Error(ErrorCode::InvalidArgument, "magnetic force density has an even angular part");

    // Radial density per unit solid angle, with 4 pi rho = div E.
    const auto e_r = electric_radial(fields);
    RadialExpression div_e;
    for (const auto& t : fields.rho.terms()) div_e += t.radial * (4.0 * std::numbers::pi * t.angular.scalar_part().at(0));
    const auto integrand = (div_e * e_r).shifted(2);
    out.radial_density.closed_form = integrate_asymptotic(eliminate_second_derivative(integrand), m);
    out.radial_density.closed_value = out.radial_density.closed_form.eval(rp);
    out.radial_density.quadrature = integrate_quadrature(integrand, rp, m);
    return out;
}

struct MomentumResult
{
    VectorQuantity total;           // P = (1/4 pi c) int E x H d^3r
    ScalarQuantity radial;          // P_r = int r E^2 dr
    Vec3 angular_factor = Vec3::Zero();  // I_omega
};

inline MomentumResult self_momentum(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    const auto density = cross(fields.E, fields.H) * (1.0 / (4.0 * std::numbers::pi * p.c));
    MomentumResult out;
    out.total.closed_form = integrate_volume_asymptotic_vector(density, m);
    out.total.closed_value = out.total.closed_form.eval(rp);
    out.total.quadrature = integrate_volume_quadrature(density, rp, m).vector;
    out.angular_factor = sphere_integrate_exact(AngularExpression::mu_cross_u(p.mu)).vector / (4.0 * std::numbers::pi * p.e * p.c);
    const auto e_r = electric_radial(fields);
    const auto integrand = (e_r * e_r).shifted(1);
    out.radial.closed_form = integrate_asymptotic(integrand, m);
    out.radial.closed_value = out.radial.closed_form.eval(rp);
    out.radial.quadrature = integrate_quadrature(integrand, rp, m);
    return out;
}

struct SpinResult
{
    VectorQuantity total;           // S = (1/4 pi c) int r x (E x H) d^3r
    ScalarQuantity radial;          // S_r = int r^2 E^2 dr
    Vec3 angular_factor = Vec3::Zero();  // J_omega = 2 mu / (3 e c)
};

inline SpinResult spin(const PhysicalParams& p, const Mollifier& m, const RegularizationPoint& rp)
{
    const auto fields = build_fields(p);
    const auto density = position_cross(cross(fields.E, fields.H)) * (1.0 / (4.0 * std::numbers::pi * p.c));
    SpinResult out;
    out.total.closed_form = integrate_volume_asymptotic_vector(density, m);
    out.total.closed_value = out.total.closed_form.eval(rp);
    out.total.quadrature = integrate_volume_quadrature(density, rp, m).vector;
    const auto u = AngularExpression::u(p.mu);
    out.angular_factor = sphere_integrate_exact(cross(u, AngularExpression::mu_cross_u(p.mu))).vector /
                         (4.0 * std::numbers::pi * p.e * p.c);
    const auto e_r = electric_radial(fields);
    const auto integrand = (e_r * e_r).shifted(2);
    out.radial.closed_form = integrate_asymptotic(integrand, m);
    out.radial.closed_value = out.radial.closed_form.eval(rp);
    out.radial.quadrature = integrate_quadrature(integrand, rp, m);
    return out;
}

}  // namespace colombeau
