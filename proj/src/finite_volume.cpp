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

#include "relbec/finite_volume.hpp"

#include "relbec/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>

namespace relbec {

namespace {

std::int64_t fft_length(std::int64_t minimum)
{
    // Smallest even 7-smooth integer >= minimum.
    for (std::int64_t n = minimum + (minimum % 2);; n += 2) {
        std::int64_t m = n;
        for (std::int64_t p : {2, 3, 5, 7})
            while (m % p == 0)
                m /= p;
        if (m == 1)
            return n;
    }
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_real(n))
    {
        if (data == nullptr)
            throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer &) = delete;
    FftwBuffer &operator=(const FftwBuffer &) = delete;

    double *data;
};

std::vector<std::uint32_t> count_shells(std::int64_t max_norm_sq)
{
    // theta(x)^3 with theta(x) = sum_n x^{n^2}; coefficients up to 3 S are
    // nonzero, so a cyclic length above 3 S keeps [0, S] free of wraparound.
    const std::int64_t length = fft_length(3 * max_norm_sq + 1);
    const std::int64_t complex_count = length / 2 + 1;
    FftwBuffer buffer(static_cast<std::size_t>(2 * complex_count));
    double *real = buffer.data;
    auto *spectrum = reinterpret_cast<fftw_complex *>(buffer.data);

    static std::mutex planner_mutex;
    fftw_plan forward, backward;
    {
        std::lock_guard lock(planner_mutex);
        forward = fftw_plan_dft_r2c_1d(static_cast<int>(length), real, spectrum, FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_1d(static_cast<int>(length), spectrum, real, FFTW_ESTIMATE);
    }

    std::fill(real, real + 2 * complex_count, 0.0);
    real[0] = 1.0;
    for (std::int64_t j = 1; j * j <= max_norm_sq; ++j)
        real[j * j] = 2.0;

    fftw_execute(forward);
    for (std::int64_t i = 0; i < complex_count; ++i) {
        const double re = spectrum[i][0];
        const double im = spectrum[i][1];
        const double re2 = re * re - im * im;
        const double im2 = 2.0 * re * im;
        spectrum[i][0] = re2 * re - im2 * im;
        spectrum[i][1] = re2 * im + im2 * re;
    }
    fftw_execute(backward);

    {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(max_norm_sq + 1));
    const double scale = 1.0 / static_cast<double>(length);
    for (std::int64_t s = 0; s <= max_norm_sq; ++s) {
        const double value = real[s] * scale;
        const double rounded = std::round(value);
        if (std::abs(value - rounded) > 0.25 || rounded < 0.0) {
            std::ostringstream msg;
            msg << "FFT shell count at |n|^2 = " << s << " is not an integer: " << value;
            throw Error(ErrorCode::NonConvergence, "shell_multiplicities", msg.str());
        }
        counts[static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(rounded);
    }
    return counts;
}

// Bose occupation at x = energy / t > 0.
double bose(double x)
{
    return x > 700.0 ? std::exp(-x) : 1.0 / std::expm1(x);
}

// Gaps sqrt(k^2+1) -/+ mu written so that mu -> -mu swaps them exactly.
struct Gaps {
    double particle;
    double antiparticle;
};

Gaps mode_gaps(double k_sq, double mu)
{
    const double energy = std::sqrt(k_sq + 1.0);
    const double product = k_sq + (1.0 - mu) * (1.0 + mu);
    if (mu > 0.0)
        return {product / (energy + mu), energy + mu};
    if (mu < 0.0)
        return {energy - mu, product / (energy - mu)};
    return {energy, energy};
}

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

void require_adequate(const PhasePoint &phase, const BoxSpec &box, double bound)
{
    if (!(bound < box.tail_tolerance())) {
        std::ostringstream msg;
        msg << "tail bound " << bound << " exceeds tolerance " << box.tail_tolerance() << " at cutoff "
            << box.mode_cutoff() << " (t = " << phase.t() << ", mu = " << phase.mu() << ", L = "
            << box.box_length() << ")";
        throw Error(ErrorCode::TailTooLarge, "mode_sum", msg.str());
    }
}

ModeSumResult finish(CompensatedSum n1, CompensatedSum n2, std::uint64_t modes, double box_length,
                     double tail_bound)
{
    const double volume = box_length * box_length * box_length;
    const double n1_fv = n1.value() / volume;
    const double n2_fv = n2.value() / volume;
    return {n1_fv - n2_fv, n1_fv, n2_fv, modes, tail_bound};
}

}  // namespace

double mode_sum_tail_bound(const PhasePoint &phase, double box_length, std::int64_t mode_cutoff)
{
    const double t = phase.t();
    const double abs_mu = std::abs(phase.mu());
    const double spacing = 2.0 * std::numbers::pi / box_length;
    const double k_cut = spacing * static_cast<double>(mode_cutoff);
    if (k_cut <= 1.0)
        return std::numeric_limits<double>::infinity();

    // occupation(E - |mu|) <= e^{|mu|/t} e^{-k/t} / (1 - e^{-(kc - |mu|)/t}) for k >= kc
    const double log_amplitude = abs_mu / t - std::log(-std::expm1(-(k_cut - abs_mu) / t));
    const double shift = std::sqrt(3.0) * 0.5 * spacing;
    const double k0 = std::max(0.0, k_cut - shift);
    const double polynomial = k0 * k0 + 2.0 * t * k0 + 2.0 * t * t;
    return std::exp(log_amplitude + shift / t + std::log(t) - k0 / t + std::log(polynomial))
        / (2.0 * std::numbers::pi * std::numbers::pi);
}

BoxSpec make_box_spec(double box_length, std::int64_t mode_cutoff, const PhasePoint &phase,
                      double tail_tolerance)
{
    if (!(box_length > 0.0) || !std::isfinite(box_length))
        throw Error(ErrorCode::InvalidArgument, "make_box_spec", "box length must be positive");
    if (mode_cutoff < 1)
        throw Error(ErrorCode::InvalidArgument, "make_box_spec", "mode cutoff must be at least 1");
    if (!(tail_tolerance > 0.0))
        throw Error(ErrorCode::InvalidArgument, "make_box_spec", "tail tolerance must be positive");
    const BoxSpec box(box_length, mode_cutoff, tail_tolerance);
    require_adequate(phase, box, mode_sum_tail_bound(phase, box_length, mode_cutoff));
    return box;
}

std::int64_t minimal_mode_cutoff(const PhasePoint &phase, double box_length, double tail_tolerance)
{
    if (!(box_length > 0.0) || !(tail_tolerance > 0.0))
        throw Error(ErrorCode::InvalidArgument, "minimal_mode_cutoff",
                    "box length and tail tolerance must be positive");
    std::int64_t hi = 1;
    while (!(mode_sum_tail_bound(phase, box_length, hi) < tail_tolerance)) {
        if (hi > (std::int64_t{1} << 40))
            throw Error(ErrorCode::TailTooLarge, "minimal_mode_cutoff", "no adequate cutoff");
        hi *= 2;
    }
    std::int64_t lo = hi / 2;  // lo inadequate (or zero), hi adequate
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (mode_sum_tail_bound(phase, box_length, mid) < tail_tolerance)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::shared_ptr<const std::vector<std::uint32_t>> shell_multiplicities(std::int64_t max_norm_sq)
{
    if (max_norm_sq < 0)
        throw Error(ErrorCode::InvalidArgument, "shell_multiplicities", "negative |n|^2 bound");

    static std::mutex cache_mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> cache;
    std::lock_guard lock(cache_mutex);
    if (!cache || static_cast<std::int64_t>(cache->size()) <= max_norm_sq)
        cache = std::make_shared<const std::vector<std::uint32_t>>(count_shells(max_norm_sq));
    return cache;
}

ModeSumResult mode_sum(const PhasePoint &phase, const BoxSpec &box)
{
    const double bound = mode_sum_tail_bound(phase, box.box_length(), box.mode_cutoff());
    require_adequate(phase, box, bound);

    const std::int64_t max_norm_sq = box.mode_cutoff() * box.mode_cutoff();
    const auto shells = shell_multiplicities(max_norm_sq);
    const double spacing_sq = box.mode_spacing() * box.mode_spacing();
    const double t = phase.t();

    CompensatedSum n1, n2;
    std::uint64_t modes = 0;
    for (std::int64_t s = 1; s <= max_norm_sq; ++s) {
        const std::uint32_t count = (*shells)[static_cast<std::size_t>(s)];
        if (count == 0)
            continue;
        const Gaps gaps = mode_gaps(spacing_sq * static_cast<double>(s), phase.mu());
        n1.add(count * bose(gaps.particle / t));
        n2.add(count * bose(gaps.antiparticle / t));
        modes += count;
    }
    return finish(n1, n2, modes, box.box_length(), bound);
}

ModeSumResult mode_sum_ungrouped(const PhasePoint &phase, const BoxSpec &box)
{
    const double bound = mode_sum_tail_bound(phase, box.box_length(), box.mode_cutoff());
    require_adequate(phase, box, bound);

    const std::int64_t cutoff = box.mode_cutoff();
    const std::int64_t max_norm_sq = cutoff * cutoff;
    std::vector<std::int64_t> norms;
    for (std::int64_t x = -cutoff; x <= cutoff; ++x)
        for (std::int64_t y = -cutoff; y <= cutoff; ++y)
            for (std::int64_t z = -cutoff; z <= cutoff; ++z) {
                const std::int64_t s = x * x + y * y + z * z;
                if (s != 0 && s <= max_norm_sq)
                    norms.push_back(s);
            }
    std::sort(norms.begin(), norms.end());

    const double spacing_sq = box.mode_spacing() * box.mode_spacing();
    const double t = phase.t();
    CompensatedSum n1, n2;
    for (std::int64_t s : norms) {
        const Gaps gaps = mode_gaps(spacing_sq * static_cast<double>(s), phase.mu());
        n1.add(bose(gaps.particle / t));
        n2.add(bose(gaps.antiparticle / t));
    }
    return finish(n1, n2, norms.size(), box.box_length(), bound);
}

CondensateMode condensate_mode(double mu, double t)
{
    if (!(t > 0.0))
        throw Error(ErrorCode::NonPositiveTemperature, "condensate_mode", "temperature must be positive");
    if (!(std::abs(mu) <= 1.0))
        throw Error(ErrorCode::UnphysicalMu, "condensate_mode", "chemical potential must satisfy |mu| <= 1");
    if (std::abs(mu) == 1.0)
        throw Error(ErrorCode::DivergentCondensateMode, "condensate_mode",
                    "zero mode is macroscopically occupied at |mu| = 1");
    const double n1 = bose((1.0 - mu) / t);
    const double n2 = bose((1.0 + mu) / t);
    return {n1, n2, n1 - n2};
}

double solve_condensate_mu(double q0_occ, double t)
{
    if (!(t > 0.0))
        throw Error(ErrorCode::NonPositiveTemperature, "solve_condensate_mu", "temperature must be positive");
    if (!std::isfinite(q0_occ))
        throw Error(ErrorCode::InvalidArgument, "solve_condensate_mu", "occupation must be finite");
    if (q0_occ == 0.0)
        return 0.0;
    if (q0_occ < 0.0)
        return -solve_condensate_mu(-q0_occ, t);

    // u = (1 - mu)/t in (0, 1/t]; residual decreases in u.
    auto residual = [&](double u) { return bose(u) - bose(2.0 / t - u) - q0_occ; };
    const double u_hi = 1.0 / t;
    double u_lo = u_hi;
    double f_lo = residual(u_lo);
    while (f_lo <= 0.0) {
        u_lo *= 0.5;
        f_lo = residual(u_lo);
    }
    // Bisection to full precision; the residual is smooth and monotone.
    double lo = u_lo, hi = u_hi;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (residual(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 1.0 - t * 0.5 * (lo + hi);
}

}  // namespace relbec
