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

// Closed-form asymptotics of radial integrals in powers a^i eps^j, and the
// least-squares bridge from quadrature sweeps back to such series.

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "mollifier.hpp"
#include "radial.hpp"
#include "upsilon.hpp"

namespace colombeau
{

using Exponents = std::pair<int, int>;  // (power of a, power of eps)

struct AsymptoticSeries
{
    std::map<Exponents, double> coeffs;
    double residual = 0.0;           // fits only: RMS relative residual
    double max_residual = 0.0;       // fits only: worst relative residual
    double condition = 0.0;          // fits only: scaled design condition number
    std::vector<std::string> notes;  // e.g. terms continued past a divergent tail

    double coefficient(int i, int j) const
    {
        auto it = coeffs.find({i, j});
        return it == coeffs.end() ? 0.0 : it->second;
    }

    double eval(double a, double eps) const
    {
        double sum = 0.0;
        for (const auto& [k, c] : coeffs) sum += c * std::pow(a, k.first) * std::pow(eps, k.second);
        return sum;
    }

    double eval(const RegularizationPoint& rp) const { return eval(rp.a(), rp.epsilon()); }

    AsymptoticSeries& operator*=(double s)
    {
        for (auto& [k, c] : coeffs) c *= s;
        return *this;
    }

    friend AsymptoticSeries operator*(AsymptoticSeries x, double s) { return x *= s; }

    std::string str() const
    {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        os.precision(10);
        bool first = true;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        {
            const auto& [k, c] = *it;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) << std::abs(c);
            if (k.first) os << " a^" << k.first;
            if (k.second) os << " eps^" << k.second;
            first = false;
        }
        return os.str();
    }
};

namespace detail
{

inline double falling_factorial(int p, int n)
{
    double v = 1.0;
    for (int k = 0; k < n; ++k) v *= static_cast<double>(p - k);
    return v;
}

}  // namespace detail

/// Rewrites every c r^p Y^alpha Y' term through
///   (r^p Y^{alpha+1})' = p r^{p-1} Y^{alpha+1} + (alpha+1) r^p Y^alpha Y'
/// dropping the boundary term, which vanishes at r = 0 for any r^n Y.
inline RadialExpression by_parts_normal_form(const RadialExpression& e)
{
    std::vector<RadialTerm> out;
    for (const auto& t : e.terms())
    {
        if (t.alpha >= 1 && t.beta == 1 && t.gamma == 0)
        {
            const double c = -t.coeff * t.p / (t.alpha + 1.0);
            if (c != 0.0) out.push_back({c, t.p - 1, t.alpha + 1, 0, 0});
        }
        else
            out.push_back(t);
    }
    return RadialExpression(std::move(out));
}

/// Removes single Y'' factors by parts, boundary terms dropped:
///   r^p Y^alpha Y''      -> -p r^{p-1} Y^alpha Y' - alpha r^p Y^{alpha-1} (Y')^2
///   r^p Y^alpha Y' Y''   -> -(p/2) r^{p-1} Y^alpha (Y')^2 - (alpha/2) r^p Y^{alpha-1} (Y')^3
/// Other Y'' products are left untouched.
inline RadialExpression eliminate_second_derivative(const RadialExpression& e)
{
    std::vector<RadialTerm> out;
    for (const auto& t : e.terms())
    {
        if (t.gamma != 1 || t.beta > 1)
        {
            out.push_back(t);
            continue;
        }
        const double half = t.beta == 1 ? 0.5 : 1.0;
        if (t.p != 0) out.push_back({-half * t.coeff * t.p, t.p - 1, t.alpha, t.beta + 1, 0});
        if (t.alpha > 0) out.push_back({-half * t.coeff * t.alpha, t.p, t.alpha - 1, t.beta + 2, 0});
    }
    return RadialExpression(std::move(out));
}

/// Leading asymptotics of int_0^inf e dr:
///   r^p Y^alpha          -> int_a^inf r^p dr = -a^{p+1}/(p+1)
///   r^p (Y')^beta        -> sum_{n<beta} M[beta,n] (r^p)^{(n)}(a) eps^{n+1-beta}
///   r^p Y^alpha Y'       -> by-parts normal form first.
///   With r_max set, Y^alpha terms integrate over [a, r_max] instead and
///   contribute the constant r_max^{p+1}/(p+1).
inline AsymptoticSeries integrate_asymptotic(const RadialExpression& e, const Mollifier& m,
                                             std::optional<double> r_max = std::nullopt)
{
    AsymptoticSeries out;
    if (r_max)
    {
        // Boundary terms r^p Y^{alpha+1}/(alpha+1) of the by-parts step at r_max, where Y = 1.
        for (const auto& t : e.terms())
            if (t.alpha >= 1 && t.beta == 1 && t.gamma == 0)
                out.coeffs[{0, 0}] += t.coeff * std::pow(*r_max, t.p) / (t.alpha + 1.0);
    }
    const auto normal = by_parts_normal_form(e);
    for (const auto& t : normal.terms())
    {
        if (t.gamma > 0)
            throw Error(ErrorCode::UnreducibleTerm, "Y'' under the integral needs a prior integration by parts");
        if (t.alpha > 0 && t.beta > 0)
            throw Error(ErrorCode::UnreducibleTerm, "mixed Y^alpha (Y')^beta with beta >= 2 has no closed form here");
        if (t.degree() == 0) throw Error(ErrorCode::UnreducibleTerm, "pure power term has no Upsilon factor");

        if (t.alpha > 0)
        {
            if (t.p == -1)
                throw Error(ErrorCode::SingularCoefficient, "int_a^inf dr/r is logarithmic; no power-law series");
            if (r_max)
                out.coeffs[{0, 0}] += t.coeff * std::pow(*r_max, t.p + 1.0) / (t.p + 1.0);
            else if (t.p > -1)
            {
                out.notes.push_back("r^" + std::to_string(t.p) +
                                    " Y term continued analytically; quadrature needs an outer cutoff");
            }
            out.coeffs[{t.p + 1, 0}] += -t.coeff / (t.p + 1.0);
            continue;
        }
        for (int n = 0; n < t.beta; ++n)
        {
            const double mom = moment(m, t.beta, n);
            if (mom == 0.0) continue;
            const double c = t.coeff * mom * detail::falling_factorial(t.p, n);
            if (c != 0.0) out.coeffs[{t.p - n, n + 1 - t.beta}] += c;
        }
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

/// r^n E^2 for the Coulomb field E = -d/dr (e Y / r).
inline RadialExpression coulomb_moment_integrand(int n, double charge = 1.0)
{
    const auto field = differentiate(RadialExpression::monomial(charge, -1, 1)) * -1.0;
    return (field * field).shifted(n);
}

/// M_n = int r^n E^2 dr as a series in (a, eps), obtained by reducing the
/// Coulomb-field square rather than by quoting the result.
inline AsymptoticSeries Mn_moment(int n, const Mollifier& m, double charge = 1.0)
{
    if (n == 3)
        throw Error(ErrorCode::SingularCoefficient, "M_3 has the singular (n-2)/(3-n) coefficient");
    return integrate_asymptotic(coulomb_moment_integrand(n, charge), m);
}

struct Sample
{
    double epsilon;
    double a;
    double value;
};

inline constexpr double fit_condition_max = 1e10;

/// Weighted least squares of samples onto monomials a^i eps^j (weights
/// 1/|value|); columns are scaled to unit norm before the condition check.
inline AsymptoticSeries fit_asymptotics(const std::vector<Sample>& samples, const std::vector<Exponents>& basis)
{
    const auto rows = static_cast<Eigen::Index>(samples.size());
    const auto cols = static_cast<Eigen::Index>(basis.size());
    if (cols == 0) throw Error(ErrorCode::InvalidArgument, "empty fit basis");
    if (rows < 2 * cols) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples per basis monomial");

    bool uses_a = false, uses_eps = false;
    for (const auto& [i, j] : basis)
    {
        uses_a = uses_a || i != 0;
        uses_eps = uses_eps || j != 0;
    }
    auto decades = [&](auto get) {
        double lo = get(samples.front()), hi = lo;
        for (const auto& s : samples)
        {
            lo = std::min(lo, get(s));
            hi = std::max(hi, get(s));
        }
        return std::log10(hi / lo);
    };
    if (uses_eps && decades([](const Sample& s) { return s.epsilon; }) < 2.0 - 1e-9)
        throw Error(ErrorCode::InvalidArgument, "samples must span at least 2 decades in epsilon");
    if (uses_a && decades([](const Sample& s) { return s.a; }) < 2.0 - 1e-9)
        throw Error(ErrorCode::InvalidArgument, "samples must span at least 2 decades in a");

    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r)
    {
        const auto& s = samples[static_cast<std::size_t>(r)];
        const double w = s.value != 0.0 ? 1.0 / std::abs(s.value) : 1.0;
        for (Eigen::Index c = 0; c < cols; ++c)
        {
            const auto& [i, j] = basis[static_cast<std::size_t>(c)];
            design(r, c) = w * std::pow(s.a, i) * std::pow(s.epsilon, j);
        }
        rhs(r) = w * s.value;
    }
    Eigen::VectorXd scale = design.colwise().norm().transpose();
    for (Eigen::Index c = 0; c < cols; ++c)
    {
        if (scale(c) == 0.0) throw Error(ErrorCode::IllConditionedFit, "basis monomial vanishes on the grid");
        design.col(c) /= scale(c);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!(cond < fit_condition_max))
    {
        std::ostringstream os;
        os << "design condition number " << cond << " exceeds " << fit_condition_max;
        throw Error(ErrorCode::IllConditionedFit, os.str());
    }
    const Eigen::VectorXd x = svd.solve(rhs);

    AsymptoticSeries out;
    out.condition = cond;
    for (Eigen::Index c = 0; c < cols; ++c) out.coeffs[basis[static_cast<std::size_t>(c)]] = x(c) / scale(c);
    const Eigen::VectorXd res = design * x - rhs;
    out.residual = std::sqrt(res.squaredNorm() / static_cast<double>(rows));
    out.max_residual = res.cwiseAbs().maxCoeff();
    return out;
}

}  // namespace colombeau
