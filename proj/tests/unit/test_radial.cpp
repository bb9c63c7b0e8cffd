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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <colombeau/asymptotic.hpp>
#include <colombeau/radial.hpp>

using namespace colombeau;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

const double M20 = 27.0 / (16.0 * std::sqrt(2.0 * std::numbers::pi));

template <typename E>
void require_error(ErrorCode code, E&& f)
{
    try
    {
        f();
        FAIL("no error raised");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == code);
    }
}

}  // namespace

TEST_CASE("radial algebra normalizes", "[radial]")
{
    const auto x = RadialExpression::monomial(2.0, -2, 1) + RadialExpression::monomial(-1.0, -1, 0, 1);
    const auto y = x - x;
    CHECK(y.empty());
    const auto z = x + x;
    CHECK(z.coefficient(-2, 1, 0, 0) == 4.0);
    CHECK(z.terms().size() == 2);
    const auto sq = x * x;
    CHECK(sq.coefficient(-4, 2, 0, 0) == 4.0);
    CHECK(sq.coefficient(-3, 1, 1, 0) == -4.0);
    CHECK(sq.coefficient(-2, 0, 2, 0) == 1.0);
    CHECK(x.shifted(3).coefficient(1, 1, 0, 0) == 2.0);
    require_error(ErrorCode::EngineLimit, [] { RadialExpression::monomial(1.0, 0, 3, 2); });
}

TEST_CASE("differentiation obeys the product rule", "[radial]")
{
    const auto m = build_mollifier(2);
    const RegularizationPoint rp(1e-4, 1e-2);
    const auto e = RadialExpression::monomial(1.5, -2, 2) + RadialExpression::monomial(-0.5, 1, 1, 1);
    const auto d = differentiate(e);
    const double h = 1e-9;
    for (double z : {-2.0, -0.3, 0.0, 0.8, 3.0})
    {
        const double r = rp.a() + z * rp.epsilon();
        const double fd = (e.eval(rp, m, r + h) - e.eval(rp, m, r - h)) / (2 * h);
        CHECK_THAT(d.eval(rp, m, r), WithinAbs(fd, 1e-5 * std::max(1.0, std::abs(fd))));
    }
    require_error(ErrorCode::DerivativeOrderExceeded, [] { differentiate(RadialExpression::monomial(1.0, 0, 0, 0, 1)); });
}

TEST_CASE("quadrature of pure powers and divergent tails", "[radial]")
{
    const auto m = build_mollifier(2);
    const RegularizationPoint rp(1e-5, 1e-2);
    require_error(ErrorCode::DivergentTail, [&] { integrate_quadrature(RadialExpression::monomial(1.0, -2), rp, m); });
    require_error(ErrorCode::DivergentTail, [&] { integrate_quadrature(RadialExpression::monomial(1.0, 0, 1), rp, m); });
    RadialQuadratureOptions opt;
    opt.r_max = 1.0;
    // int_0^1 Y dr = 1 - a to O(eps^2)
    CHECK_THAT(integrate_quadrature(RadialExpression::monomial(1.0, 0, 1), rp, m, opt), WithinAbs(1.0 - rp.a(), 1e-9));
    // int r^-2 Y dr = 1/a + O(eps^2/a^3)
    CHECK_THAT(integrate_quadrature(RadialExpression::monomial(1.0, -2, 1), rp, m), WithinRel(1.0 / rp.a(), 1e-6));
}

TEST_CASE("asymptotic rules", "[asymptotic]")
{
    const auto m = build_mollifier(2);
    // r^-3 Y^2 -> a^-2 / 2
    const auto s1 = integrate_asymptotic(RadialExpression::monomial(1.0, -3, 2), m);
    CHECK_THAT(s1.coefficient(-2, 0), WithinRel(0.5, 1e-15));
    // r^2 (Y')^2 -> M20 a^2 / eps + 2 M[2,1] a, and M[2,1] = 0 for an even kernel
    const auto s2 = integrate_asymptotic(RadialExpression::monomial(1.0, 2, 0, 2), m);
    CHECK_THAT(s2.coefficient(2, -1), WithinRel(M20, 1e-13));
    CHECK(s2.coeffs.size() == 1);
    // (Y')^3 keeps its M[3,1] and M[3,2] companions only when they are nonzero
    const auto s3p = integrate_asymptotic(RadialExpression::monomial(1.0, 2, 0, 3), m);
    CHECK_THAT(s3p.coefficient(2, -2), WithinRel(moment(m, 3, 0), 1e-13));
    CHECK_THAT(s3p.coefficient(0, 0), WithinRel(2.0 * moment(m, 3, 2), 1e-13));
    require_error(ErrorCode::SingularCoefficient,
                  [&] { integrate_asymptotic(RadialExpression::monomial(1.0, -1, 1), m); });
    require_error(ErrorCode::UnreducibleTerm, [&] { integrate_asymptotic(RadialExpression::monomial(1.0, 0, 0), m); });
    require_error(ErrorCode::UnreducibleTerm,
                  [&] { integrate_asymptotic(RadialExpression::monomial(1.0, 0, 0, 0, 1), m); });
    require_error(ErrorCode::UnreducibleTerm,
                  [&] { integrate_asymptotic(RadialExpression::monomial(1.0, -2, 1, 2), m); });
    const auto s3 = integrate_asymptotic(RadialExpression::monomial(1.0, 1, 1), m);
    CHECK_FALSE(s3.notes.empty());
}

TEST_CASE("by-parts forms agree with quadrature", "[asymptotic]")
{
    const auto m = build_mollifier(2);
    const RegularizationPoint rp(1e-6, 1e-2);
    const auto e = RadialExpression::monomial(1.0, -3, 1, 1);
    const auto bp = by_parts_normal_form(e);
    CHECK(bp.coefficient(-4, 2, 0, 0) == 1.5);
    CHECK_THAT(integrate_quadrature(e, rp, m), WithinRel(integrate_quadrature(bp, rp, m), 1e-8));

    const auto f = RadialExpression::monomial(1.0, -1, 0, 0, 1) * RadialExpression::monomial(1.0, -1, 1);
    const auto g = eliminate_second_derivative(f);
    for (const auto& t : g.terms()) CHECK(t.gamma == 0);
    CHECK_THAT(integrate_quadrature(f, rp, m), WithinRel(integrate_quadrature(g, rp, m), 1e-9));
}

TEST_CASE("M_n closed forms", "[asymptotic]")
{
    const auto m = build_mollifier(2);
    for (int n : {0, 1, 2, 4})
    {
        const auto s = Mn_moment(n, m);
        CHECK_THAT(s.coefficient(n - 2, -1), WithinRel(M20, 1e-13));
        if (n != 2) CHECK_THAT(s.coefficient(n - 3, 0), WithinRel((n - 2.0) / (3.0 - n), 1e-13));
        else CHECK(s.coefficient(n - 3, 0) == 0.0);
    }
    require_error(ErrorCode::SingularCoefficient, [&] { Mn_moment(3, m); });
    const RegularizationPoint rp(1e-5, 1e-2);
    CHECK_THAT(integrate_quadrature(coulomb_moment_integrand(1), rp, m), WithinRel(Mn_moment(1, m).eval(rp), 3e-3));
    RadialQuadratureOptions opt;
    opt.r_max = 1.0;
    CHECK_THAT(integrate_quadrature(coulomb_moment_integrand(4), rp, m, opt),
               WithinRel(integrate_asymptotic(coulomb_moment_integrand(4), m, 1.0).eval(rp), 3e-3));
}

TEST_CASE("fit recovers synthetic coefficients", "[asymptotic]")
{
    std::vector<Sample> samples;
    for (double eps : {1e-6, 1e-5, 1e-4})
        for (double a : {1e-3, 1e-2, 1e-1})
            samples.push_back({eps, a, 0.7 / (a * eps) - 0.5 / (a * a) + 0.1 * eps / (a * a * a)});
    const auto fit = fit_asymptotics(samples, {{-1, -1}, {-2, 0}, {-3, 1}});
    CHECK_THAT(fit.coefficient(-1, -1), WithinRel(0.7, 1e-10));
    CHECK_THAT(fit.coefficient(-2, 0), WithinRel(-0.5, 1e-8));
    CHECK(fit.max_residual < 1e-10);

    SECTION("degenerate basis is ill-conditioned")
    {
        std::vector<Sample> tied;
        for (double eps : {1e-6, 1e-5, 1e-4, 1e-3})
            tied.push_back({eps, 100 * eps, 1.0 / eps});
        try
        {
            fit_asymptotics(tied, {{0, -1}, {-1, 0}});
            FAIL("degenerate fit accepted");
        }
        catch (const Error& e)
        {
            CHECK(e.code() == ErrorCode::IllConditionedFit);
        }
    }
    SECTION("samples must span two decades")
    {
        std::vector<Sample> narrow;
        for (double eps : {1e-5, 2e-5, 4e-5, 8e-5}) narrow.push_back({eps, 1e-2, 1.0 / eps});
        CHECK_THROWS_AS(fit_asymptotics(narrow, {{0, -1}}), Error);
    }
}
