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

// Benchmark data and label files.
//
// Data files hold one point per line as whitespace-separated decimals.
// Label files hold one integer per line: clusters are numbered 1..k and
// 0 marks a noise point. Either may be gzip-compressed.

#pragma once

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvopt/error.hpp"
#include "cvopt/rng.hpp"

namespace cvopt {

/// An n-by-d point cloud stored row-major.
class Dataset {
public:
    Dataset() = default;

    Dataset(std::vector<double> values, std::size_t n, std::size_t d)
        : values_(std::move(values)), n_(n), d_(d) {
        if (n_ == 0 || d_ == 0) throw EmptyInputError("dataset must have n >= 1 and d >= 1");
        if (values_.size() != n_ * d_) throw LengthError("dataset buffer does not match n*d");
        for (double v : values_)
            if (!std::isfinite(v)) throw FormatError("dataset contains a non-finite value");
    }

    static Dataset from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw EmptyInputError("no rows");
        std::vector<double> v;
        const std::size_t d = rows.front().size();
        for (const auto& r : rows) {
            if (r.size() != d) throw FormatError("ragged rows");
            v.insert(v.end(), r.begin(), r.end());
        }
        return Dataset(std::move(v), rows.size(), d);
    }

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }

    std::span<const double> row(std::size_t i) const { return {values_.data() + i * d_, d_}; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * d_ + j]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const Dataset&) const = default;

private:
    std::vector<double> values_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
};

/// Euclidean distance between two rows. Symmetric bit-for-bit.
inline double euclidean(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t u = 0; u < x.size(); ++u) {
        const double t = x[u] - y[u];
        s += t * t;
    }
    return std::sqrt(s);
}

inline double squared_euclidean(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t u = 0; u < x.size(); ++u) {
        const double t = x[u] - y[u];
        s += t * t;
    }
    return s;
}

/// Expert labelings of one dataset. Label 0 is noise; 1..k_j are clusters.
struct ReferenceSet {
    std::vector<std::vector<int>> labelings;
    std::vector<int> cardinalities;

    static ReferenceSet from_labelings(std::vector<std::vector<int>> labelings) {
        if (labelings.empty()) throw EmptyInputError("reference set needs at least one labeling");
        ReferenceSet r;
        const std::size_t n = labelings.front().size();
        for (const auto& l : labelings) {
            if (l.size() != n) throw LengthError("reference labelings differ in length");
            int k = 0;
            for (int v : l) {
                if (v < 0) throw FormatError("negative reference label");
                k = std::max(k, v);
            }
            std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
            for (int v : l) seen[static_cast<std::size_t>(v)] = true;
            for (int c = 1; c <= k; ++c)
                if (!seen[static_cast<std::size_t>(c)])
                    throw NotSurjectiveError("reference labeling skips cluster " + std::to_string(c));
            if (k < 1) throw FormatError("reference labeling has no clusters");
            r.cardinalities.push_back(k);
        }
        r.labelings = std::move(labelings);
        return r;
    }

    std::size_t size() const { return labelings.size(); }

    /// Distinct cardinalities in increasing order.
    std::vector<int> distinct_cardinalities() const {
        std::vector<int> ks = cardinalities;
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        return ks;
    }
};

namespace detail {

inline std::string read_text(const std::filesystem::path& path) {
    gzFile f = gzopen(path.string().c_str(), "rb");
    if (!f) throw IoError("cannot open " + path.string());
    std::string out;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(f);
    if (failed) throw IoError("read error in " + path.string());
    return out;
}

inline bool ends_with_gz(const std::filesystem::path& path) {
    return path.extension() == ".gz";
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    if (ends_with_gz(path)) {
        gzFile f = gzopen(path.string().c_str(), "wb");
        if (!f) throw IoError("cannot create " + path.string());
        const int wrote = text.empty() ? 0 : gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
        gzclose(f);
        if (!text.empty() && wrote <= 0) throw IoError("write error in " + path.string());
        return;
    }
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw IoError("cannot create " + path.string());
    const std::size_t wrote = std::fwrite(text.data(), 1, text.size(), f);
    const int closed = std::fclose(f);
    if (wrote != text.size() || closed != 0) throw IoError("write error in " + path.string());
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on newlines, dropping blank lines; line numbers are 1-based.
template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (std::all_of(line.begin(), line.end(), is_space)) continue;
        f(line, lineno);
    }
}

template <class F>
void for_each_token(std::string_view line, F&& f) {
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) f(line.substr(i, j - i));
        i = j;
    }
}

// std::from_chars is locale-independent, unlike strtod.
inline double parse_double(std::string_view tok, std::size_t lineno) {
    std::string_view t = tok;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + std::string(tok) + "'");
    if (!std::isfinite(v))
        throw ParseError("line " + std::to_string(lineno) + ": non-finite value '" + std::string(tok) + "'");
    return v;
}

inline long long parse_integer(std::string_view tok, std::size_t lineno) {
    std::string_view t = tok;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + std::string(tok) + "'");
    return v;
}

}  // namespace detail

inline Dataset parse_dataset(std::string_view text) {
    std::vector<double> values;
    std::size_t n = 0;
    std::size_t d = 0;
    detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        std::size_t cols = 0;
        detail::for_each_token(line, [&](std::string_view tok) {
            values.push_back(detail::parse_double(tok, lineno));
            ++cols;
        });
        if (n == 0) d = cols;
        else if (cols != d)
            throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(d) +
                              " columns, got " + std::to_string(cols));
        ++n;
    });
    if (n == 0) throw EmptyInputError("dataset file has no rows");
    return Dataset(std::move(values), n, d);
}

inline Dataset load_dataset(const std::filesystem::path& path) {
    return parse_dataset(detail::read_text(path));
}

inline std::vector<int> parse_labels(std::string_view text, std::size_t n) {
    std::vector<int> out;
    detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        std::size_t toks = 0;
        detail::for_each_token(line, [&](std::string_view tok) {
            const long long v = detail::parse_integer(tok, lineno);
            if (v < 0) throw FormatError("line " + std::to_string(lineno) + ": negative label");
            if (v > 1'000'000'000) throw FormatError("line " + std::to_string(lineno) + ": label too large");
            out.push_back(static_cast<int>(v));
            ++toks;
        });
        if (toks != 1) throw FormatError("line " + std::to_string(lineno) + ": expected one label per line");
    });
    if (out.size() != n)
        throw LengthError("expected " + std::to_string(n) + " labels, got " + std::to_string(out.size()));
    return out;
}

/// Reads a label file as stored on disk (1..k, 0 = noise).
inline std::vector<int> load_labels(const std::filesystem::path& path, std::size_t n) {
    return parse_labels(detail::read_text(path), n);
}

/// Counts the lines of a label file without validating them against n.
inline std::size_t count_labels(const std::filesystem::path& path) {
    std::size_t n = 0;
    detail::for_each_line(detail::read_text(path), [&](std::string_view, std::size_t) { ++n; });
    return n;
}

/// Writes 0-based internal labels as 1-based cluster numbers.
inline void save_labels(std::span<const int> labels, const std::filesystem::path& path) {
    std::string text;
    text.reserve(labels.size() * 3);
    for (int v : labels) {
        if (v < 0) throw RangeError("cannot save a negative internal label");
        text += std::to_string(v + 1);
        text += '\n';
    }
    detail::write_text(path, text);
}

/// Maps file labels 1..k to internal labels 0..k-1. Noise is rejected.
inline std::vector<int> file_to_internal(std::span<const int> file_labels) {
    std::vector<int> out(file_labels.size());
    for (std::size_t i = 0; i < file_labels.size(); ++i) {
        if (file_labels[i] < 1) throw RangeError("noise label cannot be mapped to a cluster");
        out[i] = file_labels[i] - 1;
    }
    return out;
}

/// Removes constant columns, then jitters every remaining entry with
/// N(0, (1e-6 * column sd)^2). The noise stream of a column depends only on
/// the seed and the column's original index.
inline Dataset preprocess(const Dataset& ds, std::uint64_t seed) {
    const std::size_t n = ds.size();
    const std::size_t d = ds.dim();
    std::vector<std::size_t> keep;
    std::vector<double> sds;
    for (std::size_t j = 0; j < d; ++j) {
        bool constant = true;
        for (std::size_t i = 1; i < n && constant; ++i) constant = ds(i, j) == ds(0, j);
        if (constant) continue;
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += ds(i, j);
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) ss += (ds(i, j) - mean) * (ds(i, j) - mean);
        keep.push_back(j);
        sds.push_back(std::sqrt(ss / static_cast<double>(n - 1)));
    }
    if (keep.empty()) throw DegenerateDataError("all columns have zero variance");

    const std::size_t d2 = keep.size();
    std::vector<double> out(n * d2);
    for (std::size_t c = 0; c < d2; ++c) {
        Rng rng(derive_seed(seed, keep[c]));
        std::normal_distribution<double> noise(0.0, 1e-6 * sds[c]);
        for (std::size_t i = 0; i < n; ++i) out[i * d2 + c] = ds(i, keep[c]) + noise(rng);
    }
    return Dataset(std::move(out), n, d2);
}

}  // namespace cvopt
