/* Copyright 2026 The relbec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "relbec/quadrature.hpp"

#include "relbec/error.hpp"
#include "relbec/statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

namespace relbec {

namespace {

// Kronrod 15-point abscissae on [-1, 1] (positive half); odd entries are
// the 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxCutDoublings = 64;
constexpr std::size_t kMaxPanels = 1u << 16;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;
};

struct ByError {
    bool operator()(const Panel &x, const Panel &y) const { return x.error < y.error; }
};

Panel gauss_kronrod(const std::function<double(double)> &f, double a, double b, int depth)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), depth};
}

std::vector<double> initial_breakpoints(double length_scale, double k_cut)
{
    std::vector<double> points{0.0};
    if (!(length_scale > 0.0) || length_scale >= k_cut) {
        for (int i = 1; i <= 8; ++i)
            points.push_back(k_cut * i / 8.0);
        return points;
    }
    for (double x = length_scale / 8.0; x < k_cut; x *= 2.0)
        points.push_back(x);
    points.push_back(k_cut);
    return points;
}

}  // namespace

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
        throw Error(ErrorCode::InvalidArgument, "QuadratureConfig",
                    "rel_tol and abs_tol must be positive and max_subdivisions >= 1");
}

double exponential_tail_bound(const ExponentialTail &tail, double k_cut)
{
    // int_{kc}^inf k^2 e^{-k/l} dk = l e^{-kc/l} (kc^2 + 2 l kc + 2 l^2)
    const double l = tail.decay_length;
    const double polynomial = k_cut * k_cut + 2.0 * l * k_cut + 2.0 * l * l;
    return std::exp(tail.log_amplitude + std::log(l) - k_cut / l + std::log(polynomial));
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)> &f,
                                         const ExponentialTail &tail,
                                         const QuadratureConfig &config,
                                         double length_scale)
{
    config.validate();
    if (!(tail.decay_length > 0.0))
        throw Error(ErrorCode::InvalidArgument, "integrate_semi_infinite",
                    "tail decay length must be positive");

    double k_cut = std::max(10.0 * tail.decay_length, 10.0);
    double tail_bound = exponential_tail_bound(tail, k_cut);
    for (int i = 0; tail_bound >= config.abs_tol; ++i) {
        if (i == kMaxCutDoublings)
            throw Error(ErrorCode::NonConvergence, "integrate_semi_infinite",
                        "exponential tail bound never fell below abs_tol");
        k_cut *= 2.0;
        tail_bound = exponential_tail_bound(tail, k_cut);
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    const std::vector<double> breaks = initial_breakpoints(length_scale, k_cut);
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Panel p = gauss_kronrod(f, breaks[i], breaks[i + 1], 0);
        value += p.value;
        error += p.error;
        heap.push(p);
    }

    while (error + tail_bound > config.rel_tol * std::abs(value) + config.abs_tol) {
        const Panel worst = heap.top();
        if (worst.depth >= config.max_subdivisions || heap.size() >= kMaxPanels) {
            std::ostringstream msg;
            msg << "error estimate " << error + tail_bound << " above tolerance after "
                << heap.size() << " panels (value " << value << ")";
            throw Error(ErrorCode::NonConvergence, "integrate_semi_infinite", msg.str());
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
        Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in ascending k so the result does not depend on heap order.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
    QuadratureResult result{0.0, tail_bound};
    for (const Panel &p : panels) {
        result.value += p.value;
        result.error_estimate += p.error;
    }
    return result;
}

ChargeDensities thermal_charge_density(const PhasePoint &phase, const QuadratureConfig &config)
{
    const double t = phase.t();
    const double abs_mu = std::abs(phase.mu());
    // For k >= kc >= 10 max(1, t): k^2 n(E -/+ mu) <= k^2 e^{|mu|/t} e^{-k/t} / (1 - e^{-9}).
    const ExponentialTail tail{abs_mu / t - std::log1p(-std::exp(-9.0)), t};
    const double thermal_momentum = std::sqrt(t * (2.0 + t));

    auto n1 = integrate_semi_infinite([&](double k) { return particle_integrand(k, phase); },
                                      tail, config, thermal_momentum);
    auto n2 = integrate_semi_infinite([&](double k) { return antiparticle_integrand(k, phase); },
                                      tail, config, thermal_momentum);
    auto net = integrate_semi_infinite([&](double k) { return charge_integrand(k, phase); },
                                       tail, config, thermal_momentum);

    const double mismatch = std::abs(net.value - (n1.value - n2.value));
    const double allowed = 10.0 * config.rel_tol * (n1.value + n2.value) + 10.0 * config.abs_tol;
    if (mismatch > allowed) {
        std::ostringstream msg;
        msg << "direct net-charge integral " << net.value << " disagrees with n1 - n2 = "
            << n1.value - n2.value << " at t = " << t << ", mu = " << phase.mu();
        throw Error(ErrorCode::NonConvergence, "thermal_charge_density", msg.str());
    }

    const double norm = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
    return ChargeDensities::from_components(n1.value * norm, n2.value * norm);
}

}  // namespace relbec
