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

// Angular factors of the electron fields: scalars and vectors built from the
// unit radius u and a fixed moment vector mu. Every expression is kept in
// the canonical form
//     scalar:  s(t)
//     vector:  f(t) u + g(t) mu + h(t) (mu x u),     t = u . mu,
// where u x (mu x u) is reduced to mu - t u on construction.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "quadrature.hpp"

namespace colombeau
{

using Vec3 = Eigen::Vector3d;

/// Polynomial in t, coefficients by ascending power.
using TPoly = std::vector<double>;

namespace poly
{

inline TPoly trim(TPoly p)
{
    while (!p.empty() && p.back() == 0.0) p.pop_back();
    return p;
}

inline TPoly add(const TPoly& x, const TPoly& y, double ys = 1.0)
{
    TPoly out(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += ys * y[i];
    return trim(out);
}

inline TPoly mul(const TPoly& x, const TPoly& y)
{
    if (x.empty() || y.empty()) return {};
    TPoly out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return trim(out);
}

inline TPoly scale(const TPoly& x, double s)
{
    TPoly out(x);
    for (auto& c : out) c *= s;
    return trim(out);
}

inline const TPoly t1 = {0.0, 1.0};

inline double eval(const TPoly& p, double t)
{
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

inline int degree(const TPoly& p) { return static_cast<int>(p.size()) - 1; }

}  // namespace poly

inline constexpr int max_angular_degree = 3;

class AngularExpression
{
public:
    static AngularExpression scalar(const Vec3& mu, TPoly s)
    {
        AngularExpression e(mu, false);
        e.s_ = poly::trim(std::move(s));
        return e;
    }

    static AngularExpression constant(const Vec3& mu, double c) { return scalar(mu, {c}); }
    static AngularExpression t(const Vec3& mu) { return scalar(mu, poly::t1); }

    static AngularExpression vector(const Vec3& mu, TPoly cu, TPoly cm, TPoly cx)
    {
        AngularExpression e(mu, true);
        e.cu_ = poly::trim(std::move(cu));
        e.cm_ = poly::trim(std::move(cm));
        e.cx_ = poly::trim(std::move(cx));
        return e;
    }

    static AngularExpression u(const Vec3& mu) { return vector(mu, {1.0}, {}, {}); }
    static AngularExpression moment(const Vec3& mu) { return vector(mu, {}, {1.0}, {}); }
    static AngularExpression mu_cross_u(const Vec3& mu) { return vector(mu, {}, {}, {1.0}); }

    /// 3 u (mu.u) - mu
    static AngularExpression dipole_v1(const Vec3& mu) { return vector(mu, {0.0, 3.0}, {-1.0}, {}); }
    /// u (mu.u) - mu
    static AngularExpression dipole_v2(const Vec3& mu) { return vector(mu, {0.0, 1.0}, {-1.0}, {}); }

    bool is_vector() const noexcept { return vector_; }
    const Vec3& mu() const noexcept { return mu_; }
    const TPoly& scalar_part() const noexcept { return s_; }
    const TPoly& u_part() const noexcept { return cu_; }
    const TPoly& mu_part() const noexcept { return cm_; }
    const TPoly& cross_part() const noexcept { return cx_; }

    bool is_zero() const noexcept { return s_.empty() && cu_.empty() && cm_.empty() && cx_.empty(); }

    /// Polynomial degree in the components of u.
    int degree() const
    {
        if (!vector_) return std::max(0, poly::degree(s_));
        int d = 0;
        if (!cu_.empty()) d = std::max(d, poly::degree(cu_) + 1);
        if (!cm_.empty()) d = std::max(d, poly::degree(cm_));
        if (!cx_.empty()) d = std::max(d, poly::degree(cx_) + 1);
        return d;
    }

    /// +1 even, -1 odd under u -> -u; empty when mixed.
    std::optional<int> parity() const
    {
        std::optional<int> par;
        bool mixed = false;
        auto visit = [&](const TPoly& p, int generator_parity) {
            for (std::size_t k = 0; k < p.size(); ++k)
            {
                if (p[k] == 0.0) continue;
                const int q = (k % 2 == 0 ? 1 : -1) * generator_parity;
                if (par && *par != q) mixed = true;
                par = q;
            }
        };
        if (!vector_)
            visit(s_, 1);
        else
        {
            visit(cu_, -1);
            visit(cm_, 1);
            visit(cx_, -1);
        }
        if (mixed) return std::nullopt;
        return par.value_or(1);
    }

    AngularExpression& operator+=(const AngularExpression& o)
    {
        check_compatible(o);
        s_ = poly::add(s_, o.s_);
        cu_ = poly::add(cu_, o.cu_);
        cm_ = poly::add(cm_, o.cm_);
        cx_ = poly::add(cx_, o.cx_);
        return *this;
    }

    AngularExpression& operator*=(double c)
    {
        s_ = poly::scale(s_, c);
        cu_ = poly::scale(cu_, c);
        cm_ = poly::scale(cm_, c);
        cx_ = poly::scale(cx_, c);
        return *this;
    }

    friend AngularExpression operator+(AngularExpression x, const AngularExpression& y) { return x += y; }
    friend AngularExpression operator-(AngularExpression x, const AngularExpression& y) { return x += y * -1.0; }
    friend AngularExpression operator*(AngularExpression x, double c) { return x *= c; }
    friend AngularExpression operator*(double c, AngularExpression x) { return x *= c; }

    /// Product with a scalar-valued expression.
    friend AngularExpression operator*(const AngularExpression& x, const AngularExpression& y)
    {
        if (x.vector_ && y.vector_) throw Error(ErrorCode::InvalidArgument, "use dot() or cross() for two vectors");
        if (x.vector_) return y * x;
        const auto& s = x.s_;
        if (!y.vector_) return scalar(x.mu_, poly::mul(s, y.s_));
        return vector(x.mu_, poly::mul(s, y.cu_), poly::mul(s, y.cm_), poly::mul(s, y.cx_));
    }

    friend AngularExpression dot(const AngularExpression& x, const AngularExpression& y)
    {
        require_vectors(x, y);
        const double m2 = x.mu_.squaredNorm();
        const TPoly m2_minus_t2 = {m2, 0.0, -1.0};
        TPoly out = poly::mul(x.cu_, y.cu_);
        out = poly::add(out, poly::mul(poly::t1, poly::add(poly::mul(x.cu_, y.cm_), poly::mul(x.cm_, y.cu_))));
        out = poly::add(out, poly::mul(x.cm_, y.cm_), m2);
        out = poly::add(out, poly::mul(m2_minus_t2, poly::mul(x.cx_, y.cx_)));
        return scalar(x.mu_, out);
    }

    friend AngularExpression cross(const AngularExpression& x, const AngularExpression& y)
    {
        require_vectors(x, y);
        const double m2 = x.mu_.squaredNorm();
        const TPoly& t = poly::t1;
        // u x X = mu - t u,  mu x X = t mu - m2 u,  u x mu = -X  (X = mu x u)
        TPoly cu = poly::mul(t, poly::add(poly::mul(x.cx_, y.cu_), poly::mul(x.cu_, y.cx_), -1.0));
        cu = poly::add(cu, poly::add(poly::mul(x.cx_, y.cm_), poly::mul(x.cm_, y.cx_), -1.0), m2);
        TPoly cm = poly::add(poly::mul(x.cu_, y.cx_), poly::mul(x.cx_, y.cu_), -1.0);
        cm = poly::add(cm, poly::mul(t, poly::add(poly::mul(x.cm_, y.cx_), poly::mul(x.cx_, y.cm_), -1.0)));
        TPoly cx = poly::add(poly::mul(x.cm_, y.cu_), poly::mul(x.cu_, y.cm_), -1.0);
        return vector(x.mu_, cu, cm, cx);
    }

    double eval_scalar(const Vec3& u) const
    {
        if (vector_) throw Error(ErrorCode::InvalidArgument, "expression is vector-valued");
        return poly::eval(s_, u.dot(mu_));
    }

    Vec3 eval_vector(const Vec3& u) const
    {
        if (!vector_) throw Error(ErrorCode::InvalidArgument, "expression is scalar-valued");
        const double tv = u.dot(mu_);
        return poly::eval(cu_, tv) * u + poly::eval(cm_, tv) * mu_ + poly::eval(cx_, tv) * mu_.cross(u);
    }

    /// Same expression with the moment vector replaced (used for rotation checks).
    AngularExpression with_mu(const Vec3& mu) const
    {
        auto out = *this;
        out.mu_ = mu;
        return out;
    }

    std::string str() const
    {
        std::ostringstream os;
        auto term = [&](const TPoly& p, const char* gen) {
            if (p.empty()) return;
            os << (os.tellp() > 0 ? " + " : "") << "(";
            for (std::size_t k = 0; k < p.size(); ++k)
                os << (k ? ", " : "") << p[k];
            os << ")" << gen;
        };
        if (!vector_)
            term(s_, "[t]");
        else
        {
            term(cu_, "[t] u");
            term(cm_, "[t] mu");
            term(cx_, "[t] mu x u");
        }
        const auto s = os.str();
        return s.empty() ? "0" : s;
    }

private:
    AngularExpression(const Vec3& mu, bool is_vec) : mu_(mu), vector_(is_vec) {}

    static void require_vectors(const AngularExpression& x, const AngularExpression& y)
    {
        if (!x.vector_ || !y.vector_) throw Error(ErrorCode::InvalidArgument, "dot/cross need two vectors");
        x.check_compatible(y);
    }

    void check_compatible(const AngularExpression& o) const
    {
        if (vector_ != o.vector_) throw Error(ErrorCode::InvalidArgument, "cannot add scalar and vector expressions");
        if (mu_ != o.mu_) throw Error(ErrorCode::InvalidArgument, "expressions use different moment vectors");
    }

    Vec3 mu_;
    bool vector_;
    TPoly s_, cu_, cm_, cx_;
};

/// Scalar or vector result of a sphere integral.
struct SphereIntegral
{
    bool is_vector = false;
    double scalar = 0.0;
    Vec3 vector = Vec3::Zero();

    double magnitude() const { return is_vector ? vector.norm() : std::abs(scalar); }
};

namespace detail
{

// int t^k d omega with t = u . mu
inline double sphere_power(double mu_norm, std::size_t k)
{
    if (k % 2 == 1) return 0.0;
    return 4.0 * std::numbers::pi * std::pow(mu_norm, static_cast<double>(k)) / (k + 1.0);
}

}  // namespace detail

/// Exact sphere integral from the moment identities
///   int t^k = 4 pi |mu|^k/(k+1) (k even),  int t^k u = mu int t^{k+1} / |mu|^2,
///   int t^k (mu x u) = 0.
/// Throws NotInTable above the engine's degree limit.
inline SphereIntegral sphere_integrate_exact(const AngularExpression& e)
{
    if (e.degree() > max_angular_degree)
        throw Error(ErrorCode::NotInTable, "angular degree " + std::to_string(e.degree()) + " is outside the table");
    const double mn = e.mu().norm();
    SphereIntegral out;
    out.is_vector = e.is_vector();
    if (!e.is_vector())
    {
        for (std::size_t k = 0; k < e.scalar_part().size(); ++k)
            out.scalar += e.scalar_part()[k] * detail::sphere_power(mn, k);
        return out;
    }
    double along_mu = 0.0;
    for (std::size_t k = 0; k < e.mu_part().size(); ++k) along_mu += e.mu_part()[k] * detail::sphere_power(mn, k);
    if (mn > 0.0)
        for (std::size_t k = 0; k < e.u_part().size(); ++k)
            along_mu += e.u_part()[k] * detail::sphere_power(mn, k + 1) / (mn * mn);
    out.vector = along_mu * e.mu();
    return out;
}

/// Product rule: Gauss-Legendre in cos(theta) times a uniform phi grid.
struct SphereRule
{
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int exact_degree = 0;

    static SphereRule product(int n_theta = 16, int n_phi = 32)
    {
        SphereRule rule;
        const auto [x, w] = quad::gauss_legendre(n_theta);
        for (int i = 0; i < n_theta; ++i)
        {
            const double st = std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]));
            for (int j = 0; j < n_phi; ++j)
            {
                const double phi = 2.0 * std::numbers::pi * (j + 0.5) / n_phi;
                rule.nodes.emplace_back(st * std::cos(phi), st * std::sin(phi), x[i]);
                rule.weights.push_back(w[i] * 2.0 * std::numbers::pi / n_phi);
            }
        }
        rule.exact_degree = std::min(2 * n_theta - 1, n_phi - 1);
        return rule;
    }
};

template <typename F>
auto sphere_integrate(F&& f, const SphereRule& rule)
{
    using R = decltype(f(Vec3{}));
    R sum = R();
    if constexpr (std::is_same_v<R, Vec3>) sum = Vec3::Zero();
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

inline SphereIntegral sphere_integrate_quadrature(const AngularExpression& e,
                                                  const SphereRule& rule = SphereRule::product())
{
    if (rule.exact_degree < 6) throw Error(ErrorCode::InvalidArgument, "sphere rule must be exact to degree >= 6");
    SphereIntegral out;
    out.is_vector = e.is_vector();
    if (e.is_vector())
        out.vector = sphere_integrate([&](const Vec3& u) { return e.eval_vector(u); }, rule);
    else
        out.scalar = sphere_integrate([&](const Vec3& u) { return e.eval_scalar(u); }, rule);
    return out;
}

}  // namespace colombeau
