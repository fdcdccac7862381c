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

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "cvopt/error.hpp"
#include "cvopt/owa.hpp"

namespace cvopt {

enum class CviFamily { BallHall, CalinskiHarabasz, DaviesBouldin, Silhouette, SilhouetteW, GDunn, DuNN, WCNN };

/// Identifies one cluster validity index. Every index is oriented so that
/// larger values are better.
///
/// String forms: "BallHall", "CalinskiHarabasz", "DaviesBouldin",
/// "Silhouette", "SilhouetteW", "GDunn_d<1-5>_D<1-3>",
/// "DuNN_<M>_<OWA>_<OWA>", "WCNN_<M>".
struct CviSpec {
    CviFamily family = CviFamily::CalinskiHarabasz;
    int lowercase_d = 0;  // GDunn separation variant 1..5
    int uppercase_d = 0;  // GDunn compactness variant 1..3
    std::size_t M = 0;    // DuNN, WCNN
    OwaSpec separation;   // DuNN
    OwaSpec compactness;  // DuNN

    static CviSpec simple(CviFamily f) {
        CviSpec s;
        s.family = f;
        return s;
    }
    static CviSpec gdunn(int d, int D) {
        if (d < 1 || d > 5 || D < 1 || D > 3) throw ParameterError("GDunn variants are d1..d5, D1..D3");
        CviSpec s;
        s.family = CviFamily::GDunn;
        s.lowercase_d = d;
        s.uppercase_d = D;
        return s;
    }
    static CviSpec dunn_nn(std::size_t M, OwaSpec sep, OwaSpec comp) {
        if (M < 1) throw ParameterError("DuNN needs M >= 1");
        if (sep.kind == OwaKind::Const) throw ParameterError("DuNN separation cannot be Const");
        CviSpec s;
        s.family = CviFamily::DuNN;
        s.M = M;
        s.separation = sep;
        s.compactness = comp;
        return s;
    }
    static CviSpec wcnn(std::size_t M) {
        if (M < 1) throw ParameterError("WCNN needs M >= 1");
        CviSpec s;
        s.family = CviFamily::WCNN;
        s.M = M;
        return s;
    }

    bool uses_neighbours() const { return family == CviFamily::DuNN || family == CviFamily::WCNN; }

    /// Same index with a different neighbourhood size (no-op for others).
    CviSpec with_M(std::size_t m) const {
        CviSpec s = *this;
        if (uses_neighbours()) s.M = m;
        return s;
    }

    std::string name() const {
        switch (family) {
            case CviFamily::BallHall: return "BallHall";
            case CviFamily::CalinskiHarabasz: return "CalinskiHarabasz";
            case CviFamily::DaviesBouldin: return "DaviesBouldin";
            case CviFamily::Silhouette: return "Silhouette";
            case CviFamily::SilhouetteW: return "SilhouetteW";
            case CviFamily::GDunn:
                return "GDunn_d" + std::to_string(lowercase_d) + "_D" + std::to_string(uppercase_d);
            case CviFamily::DuNN:
                return "DuNN_" + std::to_string(M) + "_" + separation.str() + "_" + compactness.str();
            case CviFamily::WCNN: return "WCNN_" + std::to_string(M);
        }
        return {};
    }

    static CviSpec parse(std::string_view s) {
        if (s == "BallHall") return simple(CviFamily::BallHall);
        if (s == "CalinskiHarabasz" || s == "Cali\xc5\x84skiHarabasz") return simple(CviFamily::CalinskiHarabasz);
        if (s == "DaviesBouldin") return simple(CviFamily::DaviesBouldin);
        if (s == "Silhouette") return simple(CviFamily::Silhouette);
        if (s == "SilhouetteW") return simple(CviFamily::SilhouetteW);
        const auto bad = [&] { return ParseError("unknown cluster validity index '" + std::string(s) + "'"); };
        const auto number = [&](std::string_view t) {
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) throw bad();
            return v;
        };
        if (s.starts_with("GDunn_d")) {
            // GDunn_d<x>_D<y>
            if (s.size() != 11 || s.substr(8, 2) != "_D") throw bad();
            return gdunn(static_cast<int>(number(s.substr(7, 1))), static_cast<int>(number(s.substr(10, 1))));
        }
        if (s.starts_with("WCNN_")) return wcnn(number(s.substr(5)));
        if (s.starts_with("DuNN_")) {
            std::string_view rest = s.substr(5);
            const std::size_t a = rest.find('_');
            if (a == std::string_view::npos) throw bad();
            const std::size_t M = number(rest.substr(0, a));
            rest = rest.substr(a + 1);
            const std::size_t b = rest.find('_');
            if (b == std::string_view::npos) throw bad();
            return dunn_nn(M, OwaSpec::parse(rest.substr(0, b)), OwaSpec::parse(rest.substr(b + 1)));
        }
        throw bad();
    }

    bool operator==(const CviSpec&) const = default;
};

/// The 52 indices studied on the benchmark battery: 5 classical ones,
/// 15 generalised Dunn variants, 30 near-neighbour Dunn variants and
/// WCNN for M = 5, 25.
inline std::vector<CviSpec> standard_indices() {
    std::vector<CviSpec> out;
    for (auto f : {CviFamily::BallHall, CviFamily::CalinskiHarabasz, CviFamily::DaviesBouldin, CviFamily::Silhouette,
                   CviFamily::SilhouetteW})
        out.push_back(CviSpec::simple(f));
    for (int d = 1; d <= 5; ++d)
        for (int D = 1; D <= 3; ++D) out.push_back(CviSpec::gdunn(d, D));
    for (const char* name :
         {"DuNN_5_Max_Const",      "DuNN_5_Mean_Const",       "DuNN_5_Min_Const",       "DuNN_25_Max_Const",
          "DuNN_25_Mean_Const",    "DuNN_25_Min_Const",       "DuNN_25_SMax:5_Const",   "DuNN_25_SMin:5_Const",
          "DuNN_5_Max_Min",        "DuNN_5_Mean_Min",         "DuNN_5_Min_Min",         "DuNN_25_Max_Min",
          "DuNN_25_Mean_Min",      "DuNN_25_Min_Min",         "DuNN_25_SMax:5_SMin:5",  "DuNN_25_SMax:5_Min",
          "DuNN_5_Max_Max",        "DuNN_5_Mean_Max",         "DuNN_5_Min_Max",         "DuNN_25_Max_Max",
          "DuNN_25_Mean_Max",      "DuNN_25_Min_Max",         "DuNN_25_SMin:5_Max",     "DuNN_25_SMin:5_SMax:5",
          "DuNN_5_Max_Mean",       "DuNN_5_Mean_Mean",        "DuNN_5_Min_Mean",        "DuNN_25_Max_Mean",
          "DuNN_25_Mean_Mean",     "DuNN_25_Min_Mean"})
        out.push_back(CviSpec::parse(name));
    out.push_back(CviSpec::wcnn(5));
    out.push_back(CviSpec::wcnn(25));
    return out;
}

}  // namespace cvopt
