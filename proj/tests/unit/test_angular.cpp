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
#include <random>

#include <colombeau/angular.hpp>

using namespace colombeau;
using Catch::Matchers::WithinAbs;

namespace
{

const double pi = std::numbers::pi;

Vec3 random_unit(std::mt19937& rng)
{
    std::normal_distribution<double> n;
    return Vec3(n(rng), n(rng), n(rng)).normalized();
}

}  // namespace

TEST_CASE("dot and cross agree with pointwise vector algebra", "[angular]")
{
    const Vec3 mu(0.4, -1.1, 0.7);
    const auto v1 = AngularExpression::dipole_v1(mu);
    const auto x = AngularExpression::mu_cross_u(mu) * 2.0 + AngularExpression::u(mu) * AngularExpression::t(mu);
    const auto m = AngularExpression::moment(mu);
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i)
    {
        const Vec3 u = random_unit(rng);
        for (const auto* p : {&v1, &x, &m})
            for (const auto* q : {&v1, &x, &m})
            {
                CHECK_THAT(dot(*p, *q).eval_scalar(u), WithinAbs(p->eval_vector(u).dot(q->eval_vector(u)), 1e-12));
                CHECK((cross(*p, *q).eval_vector(u) - p->eval_vector(u).cross(q->eval_vector(u))).norm() < 1e-12);
            }
    }
}

TEST_CASE("dipole field shapes integrate as expected", "[angular]")
{
    const Vec3 mu(0.0, 0.0, 1.3);
    const double m2 = mu.squaredNorm();
    const auto v1 = AngularExpression::dipole_v1(mu);
    const auto v2 = AngularExpression::dipole_v2(mu);
    CHECK_THAT(sphere_integrate_exact(dot(v1, v1)).scalar, WithinAbs(8.0 * pi * m2, 1e-12));
    CHECK_THAT(sphere_integrate_exact(dot(v2, v2)).scalar, WithinAbs(8.0 * pi * m2 / 3.0, 1e-12));
    const auto flux = sphere_integrate_exact(cross(AngularExpression::u(mu), AngularExpression::mu_cross_u(mu)));
    CHECK((flux.vector - 8.0 * pi / 3.0 * mu).norm() < 1e-12);
    CHECK(sphere_integrate_exact(AngularExpression::mu_cross_u(mu)).vector.norm() == 0.0);
}

TEST_CASE("exact table matches quadrature", "[angular]")
{
    const Vec3 mu(0.3, -0.5, 0.8);
    const auto rule = SphereRule::product();
    for (int k = 0; k <= 3; ++k)
    {
        TPoly tk(k + 1, 0.0);
        tk[k] = 1.0;
        const auto s = AngularExpression::scalar(mu, tk);
        CHECK_THAT(sphere_integrate_exact(s).scalar, WithinAbs(sphere_integrate_quadrature(s, rule).scalar, 1e-12));
        const auto v = AngularExpression::vector(mu, {}, tk, {});
        CHECK((sphere_integrate_exact(v).vector - sphere_integrate_quadrature(v, rule).vector).norm() < 1e-12);
    }
}

TEST_CASE("degree limit and parity", "[angular]")
{
    const Vec3 mu(0, 0, 1);
    const auto t4 = AngularExpression::scalar(mu, {0, 0, 0, 0, 1});
    try
    {
        sphere_integrate_exact(t4);
        FAIL("degree 4 accepted");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == ErrorCode::NotInTable);
    }
    CHECK(AngularExpression::u(mu).parity() == -1);
    CHECK(AngularExpression::moment(mu).parity() == 1);
    CHECK(AngularExpression::dipole_v1(mu).parity() == 1);
    CHECK_FALSE(AngularExpression::scalar(mu, {1.0, 1.0}).parity().has_value());
    CHECK_THROWS_AS(sphere_integrate_quadrature(t4, SphereRule::product(2, 4)), Error);
}

TEST_CASE("integrals rotate covariantly", "[angular]")
{
    const Vec3 mu(0.0, 0.0, 1.0);
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
    const auto e = cross(AngularExpression::u(mu), AngularExpression::dipole_v1(mu)) +
                   AngularExpression::moment(mu) * AngularExpression::scalar(mu, {0.0, 0.0, 1.0});
    const auto rotated = e.with_mu(rot * mu);
    const Vec3 base = sphere_integrate_exact(e).vector;
    CHECK((sphere_integrate_exact(rotated).vector - rot * base).norm() < 1e-12);
    CHECK((sphere_integrate_quadrature(rotated).vector - rot * base).norm() < 1e-12);
}
