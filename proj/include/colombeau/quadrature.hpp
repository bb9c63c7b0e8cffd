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

// Globally adaptive Gauss-Kronrod (7/15) quadrature over a list of
// breakpoints, plus Gauss-Legendre node generation for product rules.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <span>
#include <utility>
#include <vector>

namespace colombeau::quad
{

struct Options
{
    double abs_tol = 0.0;
    double rel_tol = 1e-13;
    int max_intervals = 20000;
};

struct Result
{
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

namespace detail
{

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gk15(F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Integrates f over [points.front(), points.back()], treating every interior
/// point as a mandatory split. Points must be nondecreasing.
template <typename F>
Result integrate(F&& f, std::span<const double> points, const Options& opt = {})
{
    std::priority_queue<detail::Segment> heap;
    double total = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
    {
        if (!(points[i + 1] > points[i])) continue;
        auto seg = detail::gk15(f, points[i], points[i + 1]);
        total += seg.value;
        error += seg.error;
        heap.push(seg);
    }
    int count = static_cast<int>(heap.size());
    while (!heap.empty() && count < opt.max_intervals)
    {
        if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) break;
        auto worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break;  // interval at machine resolution
        heap.pop();
        auto left = detail::gk15(f, worst.lo, mid);
        auto right = detail::gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // Re-sum to shed the drift accumulated by incremental updates.
    double resum = 0.0;
    double reerr = 0.0;
    while (!heap.empty())
    {
        resum += heap.top().value;
        reerr += heap.top().error;
        heap.pop();
    }
    return {resum, reerr, count};
}

template <typename F>
Result integrate(F&& f, double lo, double hi, const Options& opt = {})
{
    const std::array<double, 2> pts = {lo, hi};
    return integrate(std::forward<F>(f), std::span<const double>(pts), opt);
}

/// Sorts, clips to [lo, hi] and deduplicates a breakpoint list.
inline std::vector<double> breakpoints(double lo, double hi, std::vector<double> interior)
{
    std::vector<double> pts{lo, hi};
    for (double x : interior)
        if (x > lo && x < hi) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n)
{
    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k)
            {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double step = p0 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return {x, w};
}

}  // namespace colombeau::quad
