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

#include <colombeau/upsilon.hpp>

using namespace colombeau;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("regularization point invariants", "[upsilon]")
{
    CHECK_NOTHROW(RegularizationPoint(1e-4, 1e-2));
    CHECK_THROWS_AS(RegularizationPoint(1e-2, 1e-2), Error);
    CHECK_THROWS_AS(RegularizationPoint(1e-3, 1e-2), Error);  // ratio above 1e-2
    CHECK_NOTHROW(RegularizationPoint(1e-3, 1e-2, 0.2));
    CHECK_THROWS_AS(RegularizationPoint(-1e-4, 1e-2), Error);
    CHECK_THROWS_AS(RegularizationPoint(1e-4, 1.5), Error);
    const RegularizationPoint rp(1e-4, 1e-2);
    CHECK_THAT(rp.ratio(), WithinRel(1e-2, 1e-14));
}

TEST_CASE("upsilon is a smoothed step at a", "[upsilon]")
{
    const auto m = build_mollifier(2);
    const RegularizationPoint rp(1e-4, 1e-2);
    CHECK(upsilon(rp, m, 0.0) == 0.0);
    CHECK(upsilon(rp, m, 0.5 * rp.a()) == 0.0);
    CHECK_THAT(upsilon(rp, m, 2.0 * rp.a()), WithinAbs(1.0, 1e-15));
    CHECK_THAT(upsilon(rp, m, rp.a()), WithinAbs(0.5, 1e-14));
    const auto [lo, hi] = transition_band(rp, m);
    CHECK(lo < rp.a());
    CHECK(hi > rp.a());
}

TEST_CASE("upsilon derivatives match finite differences", "[upsilon]")
{
    const auto m = build_mollifier(4);
    const RegularizationPoint rp(1e-4, 1e-2);
    const double h = 1e-8;
    for (double z : {-3.0, -1.0, -0.2, 0.5, 2.0})
    {
        const double r = rp.a() + z * rp.epsilon();
        const double fd1 = (upsilon(rp, m, r + h) - upsilon(rp, m, r - h)) / (2 * h);
        const double fd2 = (upsilon(rp, m, r + h, 1) - upsilon(rp, m, r - h, 1)) / (2 * h);
        CHECK_THAT(upsilon(rp, m, r, 1), WithinAbs(fd1, 1e-4 * std::abs(fd1) + 1e-6));
        CHECK_THAT(upsilon(rp, m, r, 2), WithinAbs(fd2, 1e-4 * std::abs(fd2) + 1e-2));
    }
    CHECK_THROWS_AS(upsilon(rp, m, rp.a(), 3), Error);
}

TEST_CASE("embedded Coulomb potential", "[upsilon]")
{
    const auto m = build_mollifier(2);
    const RegularizationPoint rp(1e-4, 1e-2);
    CHECK_THAT(embed_coulomb_potential(rp, m, 0.5, 2.0), WithinRel(4.0, 1e-10));
    CHECK_THAT(embed_coulomb_potential(rp, m, 0.05), WithinRel(20.0, 1e-8));
    // Inside the cutoff the embedded potential stays finite.
    CHECK(std::isfinite(embed_coulomb_potential(rp, m, 0.0)));
}

TEST_CASE("test functions vanish outside their support", "[upsilon]")
{
    for (const auto& t : test_functions::bank())
    {
        CHECK(t(t.radius) == 0.0);
        CHECK(t(t.radius * 1.5) == 0.0);
        CHECK(std::isfinite(t(0.0)));
    }
    const auto b = test_functions::bump(1.0);
    CHECK_THAT(b(0.0), WithinRel(std::exp(-1.0), 1e-14));
}
