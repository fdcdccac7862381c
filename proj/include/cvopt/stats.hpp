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

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "cvopt/error.hpp"

namespace cvopt::stats {

inline double mean(std::span<const double> x) {
    if (x.empty()) throw EmptyInputError("mean of an empty sample");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

/// Sample standard deviation (n - 1 denominator); 0 for a single value.
inline double sd(std::span<const double> x) {
    if (x.empty()) throw EmptyInputError("sd of an empty sample");
    if (x.size() == 1) return 0.0;
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

/// Linear-interpolation quantile (Hyndman-Fan type 7): with sorted x,
/// h = (n - 1) q and Q = x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
inline double quantile(std::span<const double> x, double q) {
    if (x.empty()) throw EmptyInputError("quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("quantile level must lie in [0, 1]");
    std::vector<double> s(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    const double h = static_cast<double>(s.size() - 1) * q;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= s.size()) return s.back();
    return s[lo] + (h - static_cast<double>(lo)) * (s[lo + 1] - s[lo]);
}

inline double median(std::span<const double> x) { return quantile(x, 0.5); }

}  // namespace cvopt::stats
