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

// Term algebra for radial profiles built from r and Upsilon:
//   sum_k c_k r^{p_k} Y^{alpha_k} (Y')^{beta_k} (Y'')^{gamma_k}
// with direct quadrature at a finite regularization point.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "mollifier.hpp"
#include "quadrature.hpp"
#include "upsilon.hpp"

namespace colombeau
{

inline constexpr int max_upsilon_degree = 4;

struct RadialTerm
{
    double coeff = 0.0;
    int p = 0;
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    auto key() const { return std::tuple(p, alpha, beta, gamma); }
    int degree() const { return alpha + beta + gamma; }
    bool same_monomial(const RadialTerm& o) const { return key() == o.key(); }

    double eval(const RegularizationPoint& rp, const Mollifier& m, double r) const
    {
        double v = coeff * std::pow(r, p);
        if (alpha) v *= std::pow(upsilon(rp, m, r, 0), alpha);
        if (beta) v *= std::pow(upsilon(rp, m, r, 1), beta);
        if (gamma) v *= std::pow(upsilon(rp, m, r, 2), gamma);
        return v;
    }
};

class RadialExpression
{
public:
    RadialExpression() = default;

    explicit RadialExpression(std::vector<RadialTerm> terms) : terms_(std::move(terms)) { normalize(); }

    /// coeff * r^p * Y^alpha (Y')^beta (Y'')^gamma
    static RadialExpression monomial(double coeff, int p, int alpha = 0, int beta = 0, int gamma = 0)
    {
        return RadialExpression({RadialTerm{coeff, p, alpha, beta, gamma}});
    }

    const std::vector<RadialTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    RadialExpression& operator+=(const RadialExpression& o)
    {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        normalize();
        return *this;
    }

    RadialExpression& operator*=(double s)
    {
        for (auto& t : terms_) t.coeff *= s;
        normalize();
        return *this;
    }

    friend RadialExpression operator+(RadialExpression x, const RadialExpression& y) { return x += y; }
    friend RadialExpression operator-(RadialExpression x, const RadialExpression& y) { return x += y * -1.0; }
    friend RadialExpression operator*(RadialExpression x, double s) { return x *= s; }
    friend RadialExpression operator*(double s, RadialExpression x) { return x *= s; }

    friend RadialExpression operator*(const RadialExpression& x, const RadialExpression& y)
    {
        std::vector<RadialTerm> out;
        out.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_)
                out.push_back({s.coeff * t.coeff, s.p + t.p, s.alpha + t.alpha, s.beta + t.beta, s.gamma + t.gamma});
        return RadialExpression(std::move(out));
    }

    /// Multiplies every term by r^k.
    RadialExpression shifted(int k) const
    {
        auto out = *this;
        for (auto& t : out.terms_) t.p += k;
        return out;
    }

    double eval(const RegularizationPoint& rp, const Mollifier& m, double r) const
    {
        double sum = 0.0;
        for (const auto& t : terms_) sum += t.eval(rp, m, r);
        return sum;
    }

    bool operator==(const RadialExpression& o) const
    {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!terms_[i].same_monomial(o.terms_[i]) || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }

    /// Coefficient of one monomial (0 when absent).
    double coefficient(int p, int alpha, int beta, int gamma) const
    {
        for (const auto& t : terms_)
            if (t.key() == std::tuple(p, alpha, beta, gamma)) return t.coeff;
        return 0.0;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < terms_.size(); ++i)
        {
            const auto& t = terms_[i];
            if (i) os << (t.coeff < 0 ? " - " : " + ");
            else if (t.coeff < 0) os << "-";
            os << std::abs(t.coeff);
            if (t.p) os << " r^" << t.p;
            if (t.alpha) os << " Y" << (t.alpha > 1 ? "^" + std::to_string(t.alpha) : "");
            if (t.beta) os << " Y'" << (t.beta > 1 ? "^" + std::to_string(t.beta) : "");
            if (t.gamma) os << " Y''" << (t.gamma > 1 ? "^" + std::to_string(t.gamma) : "");
        }
        return os.str();
    }

private:
    void normalize()
    {
        for (const auto& t : terms_)
            if (t.degree() > max_upsilon_degree)
                throw Error(ErrorCode::EngineLimit, "Upsilon degree exceeds " + std::to_string(max_upsilon_degree));
        std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) { return x.key() < y.key(); });
        std::vector<RadialTerm> merged;
        for (const auto& t : terms_)
        {
            if (!merged.empty() && merged.back().same_monomial(t))
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        std::erase_if(merged, [](const RadialTerm& t) { return t.coeff == 0.0; });
        terms_ = std::move(merged);
    }

    std::vector<RadialTerm> terms_;
};

/// d/dr by the product rule; Y -> Y' and Y' -> Y''. A Y'' factor would
/// produce Y''', which the algebra does not carry.
inline RadialExpression differentiate(const RadialExpression& e)
{
    std::vector<RadialTerm> out;
    for (const auto& t : e.terms())
    {
        if (t.gamma > 0) throw Error(ErrorCode::DerivativeOrderExceeded, "d/dr of a Y'' factor needs Y'''");
        if (t.p != 0) out.push_back({t.coeff * t.p, t.p - 1, t.alpha, t.beta, t.gamma});
        if (t.alpha > 0) out.push_back({t.coeff * t.alpha, t.p, t.alpha - 1, t.beta + 1, t.gamma});
        if (t.beta > 0) out.push_back({t.coeff * t.beta, t.p, t.alpha, t.beta - 1, t.gamma + 1});
    }
    return RadialExpression(std::move(out));
}

struct RadialQuadratureOptions
{
    std::optional<double> r_max;  // outer cutoff for terms that do not decay
    double rel_tol = 1e-13;
};

namespace detail
{

inline std::vector<double> band_points(const RegularizationPoint& rp, const Mollifier& m)
{
    const auto [lo, hi] = transition_band(rp, m);
    const double a = rp.a();
    const double e = rp.epsilon();
    return quad::breakpoints(lo, hi, {a - 5 * e, a - e, a, a + e, a + 5 * e});
}

inline std::vector<double> geometric_points(double lo, double hi)
{
    std::vector<double> pts{lo};
    for (double x = lo * 4.0; x < hi; x *= 4.0) pts.push_back(x);
    pts.push_back(hi);
    return pts;
}

template <typename F>
double integrate_term(const RadialTerm& t, const RegularizationPoint& rp, const Mollifier& m, F&& weight,
                      std::optional<double> r_max, double rel_tol)
{
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-300;
    auto f = [&](double r) { return t.eval(rp, m, r) * weight(r); };

    if (t.degree() == 0)
        throw Error(ErrorCode::DivergentTail, "pure power term r^" + std::to_string(t.p) + " carries no Upsilon factor");

    const auto band = band_points(rp, m);
    double sum = quad::integrate(f, std::span<const double>(band), opt).value;
    if (t.beta + t.gamma > 0) return sum;

    // Pure Y^alpha: beyond the band Y is exactly constant, the integrand is a power of r.
    const double hi = band.back();
    if (r_max)
    {
        if (*r_max > hi)
        {
            const auto pts = geometric_points(hi, *r_max);
            sum += quad::integrate(f, std::span<const double>(pts), opt).value;
        }
        return sum;
    }
    if (t.p >= -1)
        throw Error(ErrorCode::DivergentTail, "term r^" + std::to_string(t.p) + " Y^" + std::to_string(t.alpha) +
                                                  " diverges at infinity; declare r_max");
    // r = hi / s maps [hi, inf) onto (0, 1].
    auto mapped = [&](double s) { return f(hi / s) * hi / (s * s); };
    const std::array<double, 5> pts = {0.0, 0.01, 0.1, 0.5, 1.0};
    sum += quad::integrate(mapped, std::span<const double>(pts), opt).value;
    return sum;
}

}  // namespace detail

/// int_0^inf e(r) dr at finite (eps, a), term by term.
inline double integrate_quadrature(const RadialExpression& e, const RegularizationPoint& rp, const Mollifier& m,
                                   const RadialQuadratureOptions& opt = {})
{
    double sum = 0.0;
    for (const auto& t : e.terms())
        sum += detail::integrate_term(t, rp, m, [](double) { return 1.0; }, opt.r_max, opt.rel_tol);
    return sum;
}

/// int_0^R e(r) F(r) dr for a weight supported on [0, support].
template <typename F>
double integrate_weighted(const RadialExpression& e, const RegularizationPoint& rp, const Mollifier& m, F&& weight,
                          double support, double rel_tol = 1e-13)
{
    double sum = 0.0;
    for (const auto& t : e.terms()) sum += detail::integrate_term(t, rp, m, weight, support, rel_tol);
    return sum;
}

}  // namespace colombeau
