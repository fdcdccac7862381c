// Copyright 2026 the cvopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ordered weighted averaging operators.
//
// An OWA operator is a convex combination of its inputs sorted in
// decreasing order, q_(1) >= ... >= q_(z). Min puts all mass on q_(z),
// Max on q_(1), Mean spreads it uniformly. SMin:delta weights the 3*delta
// smallest values with a half-Gaussian profile centred at the minimum;
// SMax:delta is its mirror image at the maximum. Const ignores its input
// and yields 1.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvopt/error.hpp"

namespace cvopt {

enum class OwaKind { Min, Max, Mean, SMin, SMax, Const };

struct OwaSpec {
    OwaKind kind = OwaKind::Min;
    int delta = 0;  // SMin/SMax only

    static OwaSpec min() { return {OwaKind::Min, 0}; }
    static OwaSpec max() { return {OwaKind::Max, 0}; }
    static OwaSpec mean() { return {OwaKind::Mean, 0}; }
    static OwaSpec constant() { return {OwaKind::Const, 0}; }
    static OwaSpec smin(int delta) { return checked({OwaKind::SMin, delta}); }
    static OwaSpec smax(int delta) { return checked({OwaKind::SMax, delta}); }

    /// Accepts "Min", "Max", "Mean", "Const", "SMin:<delta>", "SMax:<delta>".
    static OwaSpec parse(std::string_view s) {
        if (s == "Min") return min();
        if (s == "Max") return max();
        if (s == "Mean") return mean();
        if (s == "Const") return constant();
        const bool is_smin = s.starts_with("SMin:");
        const bool is_smax = s.starts_with("SMax:");
        if (is_smin || is_smax) {
            std::string_view num = s.substr(5);
            int delta = 0;
            const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), delta);
            if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
                throw ParseError("bad OWA smoothing parameter in '" + std::string(s) + "'");
            return is_smin ? smin(delta) : smax(delta);
        }
        throw ParseError("unknown OWA operator '" + std::string(s) + "'");
    }

    std::string str() const {
        switch (kind) {
            case OwaKind::Min: return "Min";
            case OwaKind::Max: return "Max";
            case OwaKind::Mean: return "Mean";
            case OwaKind::Const: return "Const";
            case OwaKind::SMin: return "SMin:" + std::to_string(delta);
            case OwaKind::SMax: return "SMax:" + std::to_string(delta);
        }
        return {};
    }

    /// Number of extreme order statistics the operator looks at (0 = all).
    std::size_t support() const {
        switch (kind) {
            case OwaKind::Min:
            case OwaKind::Max: return 1;
            case OwaKind::SMin:
            case OwaKind::SMax: return 3 * static_cast<std::size_t>(delta);
            default: return 0;
        }
    }

    bool operator==(const OwaSpec&) const = default;

private:
    static OwaSpec checked(OwaSpec s) {
        if (s.delta < 1) throw ParameterError("OWA smoothing parameter must be >= 1");
        return s;
    }
};

/// Normalised half-Gaussian profile exp(-j^2 / (2 delta^2)), j = 0..t-1.
/// Entry j is the weight of the j-th most extreme value.
inline std::vector<double> smooth_profile(int delta, std::size_t t) {
    std::vector<double> w(t);
    double total = 0.0;
    const double s = static_cast<double>(delta);
    for (std::size_t j = 0; j < t; ++j) {
        const double x = static_cast<double>(j) / s;
        w[j] = std::exp(-0.5 * x * x);
        total += w[j];
    }
    for (double& v : w) v /= total;
    return w;
}

/// Weight vector over positions 1..z of the decreasingly sorted input.
inline std::vector<double> owa_weights(const OwaSpec& spec, std::size_t z) {
    if (z < 1) throw ParameterError("OWA weights need z >= 1");
    std::vector<double> w(z, 0.0);
    switch (spec.kind) {
        case OwaKind::Min: w[z - 1] = 1.0; break;
        case OwaKind::Max: w[0] = 1.0; break;
        case OwaKind::Mean: std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(z)); break;
        case OwaKind::Const: throw ParameterError("Const has no weight vector");
        case OwaKind::SMin: {
            const auto prof = smooth_profile(spec.delta, std::min(z, spec.support()));
            for (std::size_t j = 0; j < prof.size(); ++j) w[z - 1 - j] = prof[j];
            break;
        }
        case OwaKind::SMax: {
            const auto prof = smooth_profile(spec.delta, std::min(z, spec.support()));
            for (std::size_t j = 0; j < prof.size(); ++j) w[j] = prof[j];
            break;
        }
    }
    return w;
}

/// Smoothed extreme of a run of values ordered from the extreme inward.
/// Computed as anchor + sum w_j (q_j - anchor) so the result never leaves
/// [min, max] and constant inputs are reproduced exactly.
template <class Get>
double smooth_extreme(int delta, std::size_t t, Get&& nth) {
    const double anchor = nth(0);
    const double s = static_cast<double>(delta);
    double total = 0.0;
    double acc = 0.0;
    for (std::size_t j = 0; j < t; ++j) {
        const double x = static_cast<double>(j) / s;
        const double w = std::exp(-0.5 * x * x);
        total += w;
        acc += w * (nth(j) - anchor);
    }
    return anchor + acc / total;
}

/// Aggregates a multiset; std::nullopt signals an empty input to a
/// non-Const operator.
inline std::optional<double> aggregate(const OwaSpec& spec, std::span<const double> values) {
    if (spec.kind == OwaKind::Const) return 1.0;
    if (values.empty()) return std::nullopt;
    std::vector<double> q(values.begin(), values.end());
    std::sort(q.begin(), q.end());  // ascending
    const std::size_t z = q.size();
    switch (spec.kind) {
        case OwaKind::Min: return q.front();
        case OwaKind::Max: return q.back();
        case OwaKind::Mean: {
            double s = 0.0;
            for (double v : q) s += v;
            return std::clamp(s / static_cast<double>(z), q.front(), q.back());
        }
        case OwaKind::SMin: {
            const double r = smooth_extreme(spec.delta, std::min(z, spec.support()), [&](std::size_t j) { return q[j]; });
            return std::clamp(r, q.front(), q.back());
        }
        case OwaKind::SMax: {
            const double r =
                smooth_extreme(spec.delta, std::min(z, spec.support()), [&](std::size_t j) { return q[z - 1 - j]; });
            return std::clamp(r, q.front(), q.back());
        }
        case OwaKind::Const: break;
    }
    return 1.0;
}

}  // namespace cvopt
