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

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "mollifier.hpp"
#include "quadrature.hpp"

namespace colombeau
{

/// The pair (epsilon, a) at which every generalized quantity is evaluated.
/// epsilon -> 0 is taken before a -> 0, hence the ratio bound.
class RegularizationPoint
{
public:
    static constexpr double default_ratio_max = 1e-2;

    RegularizationPoint(double epsilon, double a, double ratio_max = default_ratio_max)
        : epsilon_(epsilon), a_(a)
    {
        if (!(epsilon > 0.0 && epsilon < a && a < 1.0))
        {
            std::ostringstream os;
            os << "need 0 < epsilon < a < 1, got epsilon=" << epsilon << " a=" << a;
            throw Error(ErrorCode::InvalidArgument, os.str());
        }
        if (epsilon / a > ratio_max)
        {
            std::ostringstream os;
            os << "epsilon/a=" << epsilon / a << " exceeds ratio_max=" << ratio_max;
            throw Error(ErrorCode::InvalidArgument, os.str());
        }
    }

    double epsilon() const noexcept { return epsilon_; }
    double a() const noexcept { return a_; }
    double ratio() const noexcept { return epsilon_ / a_; }

    bool operator==(const RegularizationPoint&) const = default;

private:
    double epsilon_;
    double a_;
};

/// Upsilon and its first two derivatives at radius r:
///   deriv 0: int_{(a-r)/eps}^inf eta,  deriv 1: eta((a-r)/eps)/eps,
///   deriv 2: -eta'((a-r)/eps)/eps^2.
inline double upsilon(const RegularizationPoint& rp, const Mollifier& m, double r, int deriv = 0)
{
    const double eps = rp.epsilon();
    const double x = (rp.a() - r) / eps;
    switch (deriv)
    {
        case 0: return m.tail(x);
        case 1: return m(x) / eps;
        case 2: return -m.derivative(x) / (eps * eps);
        default: throw Error(ErrorCode::DerivativeOrderExceeded, "upsilon derivative order must be 0, 1 or 2");
    }
}

/// Radii outside which every Upsilon-derivative is exactly constant.
inline std::pair<double, double> transition_band(const RegularizationPoint& rp, const Mollifier& m)
{
    const double half = m.support_cutoff() * rp.epsilon();
    return {std::max(0.0, rp.a() - half), rp.a() + half};
}

/// Mollified Coulomb potential e * int_{(a-r)/eps}^inf eta(y)/(r + eps y) dy,
/// integrated directly rather than through Upsilon.
inline double embed_coulomb_potential(const RegularizationPoint& rp, const Mollifier& m, double r, double charge = 1.0)
{
    const double eps = rp.epsilon();
    const double a = rp.a();
    if (!(a > 0.0)) throw Error(ErrorCode::PoleInDomain, "cutoff a must be positive");
    if (r < 0.0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
    const double zc = m.support_cutoff();
    const double lo = (a - r) / eps;
    if (lo >= zc) return 0.0;
    const double start = std::max(lo, -zc);
    auto integrand = [&](double y) { return m(y) / (r + eps * y); };
    const auto pts = quad::breakpoints(start, zc, {-1.0, 0.0, 1.0});
    quad::Options opt;
    opt.rel_tol = 1e-14;
    opt.abs_tol = 1e-300;
    return charge * quad::integrate(integrand, std::span<const double>(pts), opt).value;
}

/// Smooth test function with compact support [0, radius] (radial or 1-D).
struct TestFunction
{
    std::string name;
    double radius = 1.0;
    std::function<double(double)> value;

    double operator()(double r) const { return std::abs(r) >= radius ? 0.0 : value(r); }
};

namespace test_functions
{

/// exp(-1/(1 - (r/R)^2)), smooth and flat to all orders at R.
inline TestFunction bump(double radius)
{
    return {"bump(R=" + std::to_string(radius) + ")", radius,
            [radius](double r) {
                const double s = r / radius;
                const double d = 1.0 - s * s;
                return d <= 0.0 ? 0.0 : std::exp(-1.0 / d);
            }};
}

/// Shifted bump exp(-1/(1 - ((r - c)/w)^2)) centered at c, half-width w.
inline TestFunction shifted_bump(double center, double width)
{
    return {"bump(c=" + std::to_string(center) + ",w=" + std::to_string(width) + ")", center + width,
            [center, width](double r) {
                const double s = (r - center) / width;
                const double d = 1.0 - s * s;
                return d <= 0.0 ? 0.0 : std::exp(-1.0 / d);
            }};
}

/// cos(k r) times the window (1 - (r/R)^2)^6; C^5 at the support edge.
inline TestFunction windowed_cosine(double radius, double wavenumber)
{
    return {"wcos(R=" + std::to_string(radius) + ",k=" + std::to_string(wavenumber) + ")", radius,
            [radius, wavenumber](double r) {
                const double s = r / radius;
                const double w = 1.0 - s * s;
                return w <= 0.0 ? 0.0 : std::cos(wavenumber * r) * std::pow(w, 6);
            }};
}

inline std::vector<TestFunction> bank()
{
    return {bump(1.0), bump(5.0), windowed_cosine(1.0, 2.0), windowed_cosine(5.0, 1.0)};
}

}  // namespace test_functions

}  // namespace colombeau
