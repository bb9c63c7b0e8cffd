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

// Colombeau mollifiers of the form eta(z) = P(z) exp(-z^2) with P even.
//
// The coefficients of P solve the moment constraints
//   int eta = 1,   int z^{2j} eta = 0  (j = 1..q/2)
// whose matrix entries are Gamma(j + k + 1/2). Odd moments vanish by
// symmetry, so only even q are accepted.

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "quadrature.hpp"

namespace colombeau
{

inline constexpr double moment_tol = 1e-10;

class Mollifier
{
public:
    /// Coefficients c_0, c_2, ..., c_q of the even polynomial.
    Mollifier(int q, std::vector<double> even_coeffs) : q_(q), even_(std::move(even_coeffs))
    {
        init_cutoff();
    }

    int order() const noexcept { return q_; }
    std::span<const double> coefficients() const noexcept { return even_; }
    double support_cutoff() const noexcept { return cutoff_; }
    double max_abs() const noexcept { return max_abs_; }

    double polynomial(double z) const noexcept
    {
        const double z2 = z * z;
        double acc = 0.0;
        for (auto it = even_.rbegin(); it != even_.rend(); ++it) acc = acc * z2 + *it;
        return acc;
    }

    double polynomial_derivative(double z) const noexcept
    {
        const double z2 = z * z;
        double acc = 0.0;
        for (std::size_t k = even_.size() - 1; k >= 1; --k)
        {
            acc = acc * z2 + 2.0 * static_cast<double>(k) * even_[k];
        }
        return acc * z;
    }

    /// eta(z) without the support cutoff.
    double raw(double z) const noexcept { return polynomial(z) * std::exp(-z * z); }

    double operator()(double z) const noexcept
    {
        if (std::abs(z) > cutoff_) return 0.0;
        return raw(z);
    }

    double derivative(double z) const noexcept
    {
        if (std::abs(z) > cutoff_) return 0.0;
        return (polynomial_derivative(z) - 2.0 * z * polynomial(z)) * std::exp(-z * z);
    }

    /// Exact integral of the stored polynomial times the Gaussian (ideally 1).
    double total_mass() const noexcept
    {
        double sum = 0.0;
        for (std::size_t k = 0; k < even_.size(); ++k) sum += even_[k] * std::tgamma(k + 0.5);
        return sum;
    }

    /// int_x^inf eta(z) dz in closed form (erfc plus the standard recurrence
    /// for int_x^inf z^{2k} e^{-z^2}); honors the support cutoff.
    double tail(double x) const noexcept
    {
        if (x >= cutoff_) return 0.0;
        if (x <= -cutoff_) return total_mass();
        if (x < 0.0) return total_mass() - tail(-x);
        const double gauss = std::exp(-x * x);
        double ik = 0.5 * std::sqrt(std::numbers::pi) * std::erfc(x);
        double sum = even_[0] * ik;
        double xpow = x;  // x^{2k-1}
        for (std::size_t k = 1; k < even_.size(); ++k)
        {
            ik = 0.5 * (xpow * gauss + (2.0 * k - 1.0) * ik);
            sum += even_[k] * ik;
            xpow *= x * x;
        }
        return sum;
    }

private:
    void init_cutoff()
    {
        constexpr double step = 1e-3;
        constexpr double z_far = 40.0;
        max_abs_ = 0.0;
        for (double z = 0.0; z < z_far; z += step) max_abs_ = std::max(max_abs_, std::abs(raw(z)));
        cutoff_ = 0.0;
        for (double z = z_far; z > 0.0; z -= step)
        {
            if (std::abs(raw(z)) >= 1e-16 * max_abs_)
            {
                cutoff_ = z + step;
                break;
            }
        }
    }

    int q_;
    std::vector<double> even_;
    double cutoff_ = 0.0;
    double max_abs_ = 0.0;
};

inline Mollifier build_mollifier(int q)
{
    if (q < 2 || q % 2 != 0)
        throw Error(ErrorCode::InvalidOrder, "mollifier order q must be even and >= 2, got " + std::to_string(q));
    const int n = q / 2 + 1;
    Eigen::MatrixXd gram(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) gram(j, k) = std::tgamma(j + k + 0.5);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(0) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (!lu.isInvertible()) throw Error(ErrorCode::SingularMomentSystem, "Gaussian moment matrix is singular");
    Eigen::VectorXd c = lu.solve(rhs);
    if (!c.allFinite() || (gram * c - rhs).norm() > 1e-12)
        throw Error(ErrorCode::SingularMomentSystem, "moment solve did not converge");
    return Mollifier(q, std::vector<double>(c.data(), c.data() + n));
}

inline double eval_mollifier(const Mollifier& m, double z) { return m(z); }

enum class MomentMethod
{
    closed_form,
    quadrature,
};

inline std::string to_string(MomentMethod method)
{
    return method == MomentMethod::closed_form ? "closed-form" : "quadrature";
}

namespace detail
{

inline double factorial(int n)
{
    return std::tgamma(n + 1.0);
}

// Full (dense) coefficient vector of P(z)^power.
inline std::vector<double> polynomial_power(const Mollifier& m, int power)
{
    std::vector<double> base(2 * m.coefficients().size() - 1, 0.0);
    for (std::size_t k = 0; k < m.coefficients().size(); ++k) base[2 * k] = m.coefficients()[k];
    std::vector<double> acc{1.0};
    for (int p = 0; p < power; ++p)
    {
        std::vector<double> next(acc.size() + base.size() - 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

/// M[power, order] = (1/order!) int z^order eta^power(-z) dz.
inline double moment(const Mollifier& m, int power, int order, MomentMethod method = MomentMethod::closed_form)
{
    if (power < 1) throw Error(ErrorCode::InvalidArgument, "moment power must be >= 1");
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "moment order must be >= 0");
    if (method == MomentMethod::closed_form)
    {
        if (order % 2 != 0) return 0.0;
        const auto poly = detail::polynomial_power(m, power);
        double sum = 0.0;
        for (std::size_t k = 0; k < poly.size(); k += 2)
        {
            const double s = 0.5 * (order + static_cast<double>(k) + 1.0);
            sum += poly[k] * std::tgamma(s) * std::pow(static_cast<double>(power), -s);
        }
        return sum / detail::factorial(order);
    }
    const double zc = m.support_cutoff();
    auto integrand = [&](double z) { return std::pow(z, order) * std::pow(m(-z), power); };
    const std::vector<double> pts{-zc, -1.0, 0.0, 1.0, zc};
    quad::Options opt;
    opt.rel_tol = 1e-14;
    opt.abs_tol = 1e-16;
    return quad::integrate(integrand, std::span<const double>(pts), opt).value / detail::factorial(order);
}

struct MomentTable
{
    int max_power = 0;
    int max_order = 0;
    MomentMethod method = MomentMethod::closed_form;
    std::vector<double> entries;  // row-major, power 1..max_power, order 0..max_order

    double operator()(int power, int order) const
    {
        return entries.at(static_cast<std::size_t>((power - 1) * (max_order + 1) + order));
    }
};

inline MomentTable moment_table(const Mollifier& m, int max_power, int max_order,
                                MomentMethod method = MomentMethod::closed_form)
{
    MomentTable table{max_power, max_order, method, {}};
    table.entries.reserve(static_cast<std::size_t>(max_power * (max_order + 1)));
    for (int p = 1; p <= max_power; ++p)
        for (int n = 0; n <= max_order; ++n) table.entries.push_back(moment(m, p, n, method));
    return table;
}

}  // namespace colombeau
