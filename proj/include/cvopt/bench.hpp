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

// Benchmark orchestration: battery discovery, per-(dataset, index) jobs,
// persisted records, summaries and method meta-clustering.
//
// Battery layout:  <root>/<battery>/<name>.data[.gz]
//                  <root>/<battery>/<name>.labels<j>[.gz], j = 0, 1, ...
// Output layout:   <out>/<battery>/<name>/<index>.k<k>.labels
//                  <out>/records.csv, <out>/timings.csv, <out>/config.json

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cvopt/cvi/spec.hpp"
#include "cvopt/dataset.hpp"
#include "cvopt/error.hpp"
#include "cvopt/eval.hpp"
#include "cvopt/geometry.hpp"
#include "cvopt/nngraph.hpp"
#include "cvopt/optim.hpp"
#include "cvopt/partition.hpp"
#include "cvopt/stats.hpp"

namespace cvopt {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Configuration

struct RunConfig {
    fs::path battery_root;
    std::vector<std::string> include;   // "battery/name" or "battery"; empty = all
    std::vector<std::string> exclude;
    std::size_t smallest = 0;           // keep only the N datasets with fewest points; 0 = all
    std::vector<CviSpec> indices = standard_indices();
    std::vector<fs::path> candidate_dirs;  // each holds <battery>/<name>/<label files>
    GeneratorConfig generators;
    std::uint64_t preprocess_seed = 42;
    std::vector<std::size_t> M_defaults{5, 25};  // component sizes reported per M
    fs::path output = "out";
    std::size_t jobs = 1;
    std::size_t max_nk = 50000;         // skip datasets with n (k - 1) above this
};

inline RunConfig parse_run_config(const nlohmann::json& j) {
    RunConfig c;
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        static const std::vector<std::string> known{"battery_root", "include", "exclude", "smallest", "indices",
                                                    "candidate_dirs", "seed", "preprocess_seed", "P", "random_count",
                                                    "vantage_count", "V", "kmeans_restarts", "M_defaults", "output",
                                                    "jobs", "max_nk"};
        for (const auto& [key, _] : j.items())
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw ConfigError("unknown config key '" + key + "'");
        if (!j.contains("battery_root")) throw ConfigError("config needs 'battery_root'");
        c.battery_root = j.at("battery_root").get<std::string>();
        c.include = j.value("include", c.include);
        c.exclude = j.value("exclude", c.exclude);
        c.smallest = j.value("smallest", c.smallest);
        if (j.contains("indices")) {
            c.indices.clear();
            for (const auto& s : j.at("indices")) c.indices.push_back(CviSpec::parse(s.get<std::string>()));
            if (c.indices.empty()) throw ConfigError("'indices' is empty");
        }
        for (const auto& d : j.value("candidate_dirs", std::vector<std::string>{})) c.candidate_dirs.emplace_back(d);
        c.generators.seed = j.value("seed", c.generators.seed);
        c.preprocess_seed = j.value("preprocess_seed", c.generators.seed);
        c.generators.P = j.value("P", c.generators.P);
        c.generators.random_count = j.value("random_count", c.generators.random_count);
        c.generators.vantage_count = j.value("vantage_count", c.generators.vantage_count);
        c.generators.vantage_V = j.value("V", c.generators.vantage_V);
        c.generators.kmeans_restarts = j.value("kmeans_restarts", c.generators.kmeans_restarts);
        c.M_defaults = j.value("M_defaults", c.M_defaults);
        c.output = j.value("output", c.output.string());
        c.jobs = j.value("jobs", c.jobs);
        c.max_nk = j.value("max_nk", c.max_nk);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    } catch (const ParseError& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    if (c.generators.P < 1) throw ConfigError("P must be at least 1");
    if (c.jobs < 1) throw ConfigError("jobs must be at least 1");
    if (!fs::is_directory(c.battery_root)) throw ConfigError("battery root not found: " + c.battery_root.string());
    for (const auto& d : c.candidate_dirs)
        if (!fs::is_directory(d)) throw ConfigError("candidate directory not found: " + d.string());
    return c;
}

inline RunConfig load_run_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_run_config(j);
}

inline nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["battery_root"] = c.battery_root.string();
    j["include"] = c.include;
    j["exclude"] = c.exclude;
    j["smallest"] = c.smallest;
    std::vector<std::string> names;
    for (const auto& s : c.indices) names.push_back(s.name());
    j["indices"] = names;
    std::vector<std::string> dirs;
    for (const auto& d : c.candidate_dirs) dirs.push_back(d.string());
    j["candidate_dirs"] = dirs;
    j["seed"] = c.generators.seed;
    j["preprocess_seed"] = c.preprocess_seed;
    j["P"] = c.generators.P;
    j["random_count"] = c.generators.random_count;
    j["vantage_count"] = c.generators.vantage_count;
    j["V"] = c.generators.vantage_V;
    j["kmeans_restarts"] = c.generators.kmeans_restarts;
    j["M_defaults"] = c.M_defaults;
    j["output"] = c.output.string();
    j["jobs"] = c.jobs;
    j["max_nk"] = c.max_nk;
    return j;
}

// ---------------------------------------------------------------------------
// Battery

struct BatteryEntry {
    std::string id;  // "battery/name"
    fs::path data;
    std::vector<fs::path> labels;
};

namespace detail {

// "name.data.gz" -> ("name", "data"); "name.labels3" -> ("name", "labels3")
inline std::optional<std::pair<std::string, std::string>> split_battery_file(const fs::path& p) {
    std::string s = p.filename().string();
    if (s.ends_with(".gz")) s.resize(s.size() - 3);
    const auto dot = s.rfind('.');
    if (dot == std::string::npos || dot == 0) return std::nullopt;
    return std::make_pair(s.substr(0, dot), s.substr(dot + 1));
}

inline bool matches(const std::string& id, const std::vector<std::string>& patterns) {
    for (const auto& p : patterns)
        if (id == p || id.starts_with(p + "/")) return true;
    return false;
}

}  // namespace detail

/// Lists datasets under the root, sorted by id.
inline std::vector<BatteryEntry> discover_battery(const fs::path& root) {
    if (!fs::is_directory(root)) throw IoError("battery root not found: " + root.string());
    std::map<std::string, BatteryEntry> found;
    std::vector<fs::path> batteries;
    for (const auto& e : fs::directory_iterator(root))
        if (e.is_directory()) batteries.push_back(e.path());
    for (const auto& b : batteries) {
        const std::string bname = b.filename().string();
        for (const auto& f : fs::directory_iterator(b)) {
            if (!f.is_regular_file()) continue;
            const auto parts = detail::split_battery_file(f.path());
            if (!parts) continue;
            const auto& [name, kind] = *parts;
            auto& entry = found[bname + "/" + name];
            entry.id = bname + "/" + name;
            if (kind == "data") entry.data = f.path();
            else if (kind.starts_with("labels") && kind.size() > 6 &&
                     std::all_of(kind.begin() + 6, kind.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                entry.labels.push_back(f.path());
        }
    }
    std::vector<BatteryEntry> out;
    for (auto& [id, e] : found) {
        if (e.data.empty() || e.labels.empty()) continue;
        std::sort(e.labels.begin(), e.labels.end(), [](const fs::path& a, const fs::path& b) {
            const auto na = a.filename().string(), nb = b.filename().string();
            return na.size() != nb.size() ? na.size() < nb.size() : na < nb;
        });
        out.push_back(std::move(e));
    }
    return out;
}

/// Loaded, preprocessed dataset with its references and extra candidates.
struct PreparedDataset {
    std::string id;
    std::shared_ptr<const Geometry> geometry;
    ReferenceSet references;
    std::vector<std::vector<int>> external;
};

inline PreparedDataset prepare_dataset(const BatteryEntry& e, const RunConfig& cfg) {
    Dataset raw = load_dataset(e.data);
    std::vector<std::vector<int>> refs;
    for (const auto& l : e.labels) refs.push_back(load_labels(l, raw.size()));
    PreparedDataset out;
    out.id = e.id;
    out.references = ReferenceSet::from_labelings(std::move(refs));
    out.geometry = std::make_shared<const Geometry>(preprocess(raw, cfg.preprocess_seed));
    std::vector<fs::path> dirs;
    for (const auto& d : cfg.candidate_dirs)
        if (fs::is_directory(d / e.id)) dirs.push_back(d / e.id);
    out.external = load_candidate_dirs(dirs, raw.size());
    return out;
}

// ---------------------------------------------------------------------------
// Records

struct ResultsRecord {
    std::string dataset;
    std::string method;
    std::string status;               // ok | skipped | failed
    std::vector<int> ks;
    std::vector<std::string> labels;  // relative to the output directory, one per k
    std::vector<double> aris;         // raw, one per reference
    double q = 0.0;
    std::vector<double> gini;         // one per k
    std::vector<std::size_t> m;       // effective candidate count, one per k
    std::vector<std::size_t> tabu;    // tabu list size at exit, one per k
    std::string message;
    double seconds = 0.0;             // kept out of records.csv
};

namespace csv {

inline std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::vector<std::string>> parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
            any = true;
        } else if (c == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (c != '\r') {
            cell += c;
            any = true;
        }
    }
    if (any) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ';';
        s += fmt(xs[i]);
    }
    return s;
}

inline std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(';', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

}  // namespace csv

inline const char* records_header() { return "dataset,method,status,ks,labels,aris,q,gini,m,tabu,message"; }

inline std::string to_csv_row(const ResultsRecord& r) {
    using csv::join;
    using csv::number;
    const auto str = [](const auto& v) { return std::to_string(v); };
    const auto id = [](const std::string& s) { return s; };
    return csv::quote(r.dataset) + "," + csv::quote(r.method) + "," + r.status + "," + join(r.ks, str) + "," +
           csv::quote(join(r.labels, id)) + "," + join(r.aris, number) + "," + number(r.q) + "," +
           join(r.gini, number) + "," + join(r.m, str) + "," + join(r.tabu, str) + "," + csv::quote(r.message);
}

inline std::vector<ResultsRecord> parse_records(const std::string& text) {
    const auto rows = csv::parse(text);
    std::vector<ResultsRecord> out;
    if (rows.empty()) return out;
    if (rows.front().size() != 11 || rows.front()[0] != "dataset") throw FormatError("not a records file");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& c = rows[i];
        if (c.size() != 11) throw FormatError("records row " + std::to_string(i) + " has the wrong column count");
        ResultsRecord r;
        r.dataset = c[0];
        r.method = c[1];
        r.status = c[2];
        try {
            for (const auto& s : csv::split(c[3])) r.ks.push_back(std::stoi(s));
            r.labels = csv::split(c[4]);
            for (const auto& s : csv::split(c[5])) r.aris.push_back(std::stod(s));
            r.q = std::stod(c[6]);
            for (const auto& s : csv::split(c[7])) r.gini.push_back(std::stod(s));
            for (const auto& s : csv::split(c[8])) r.m.push_back(std::stoull(s));
            for (const auto& s : csv::split(c[9])) r.tabu.push_back(std::stoull(s));
        } catch (const std::logic_error&) {
            throw FormatError("records row " + std::to_string(i) + " has a malformed field");
        }
        r.message = c[10];
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ResultsRecord> load_records(const fs::path& path) { return parse_records(detail::read_text(path)); }

namespace detail {

inline void write_atomically(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Jobs

using ProgressLog = std::function<void(const std::string&)>;

/// Runs one index on one prepared dataset: one optimisation per distinct
/// reference cardinality, labels saved under `out`, scored afterwards.
inline ResultsRecord run_job(const PreparedDataset& ds, const CviSpec& spec, const RunConfig& cfg,
                             const fs::path& out) {
    ResultsRecord r;
    r.dataset = ds.id;
    r.method = spec.name();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = ds.geometry->size();
    const auto ks = ds.references.distinct_cardinalities();
    r.ks = ks;
    try {
        const int kmax = ks.back();
        if (n * static_cast<std::size_t>(kmax - 1) > cfg.max_nk) {
            r.status = "skipped";
            r.message = "n(k-1) = " + std::to_string(n * static_cast<std::size_t>(kmax - 1)) + " exceeds max_nk";
            return r;
        }
        if (ks.front() < 2) {
            r.status = "skipped";
            r.message = "a reference has fewer than 2 clusters";
            return r;
        }
        if (spec.uses_neighbours()) {
            if (spec.M >= n) {
                r.status = "skipped";
                r.message = "M is not below n";
                return r;
            }
            const auto sizes = component_sizes(ds.geometry->neighbourhood(spec.M).components);
            const std::size_t smallest = *std::min_element(sizes.begin(), sizes.end());
            if (smallest < spec.M + 1) {
                r.status = "skipped";
                r.message = "NN graph has a component of " + std::to_string(smallest) + " points (< M+1)";
                return r;
            }
        }
        std::map<int, std::vector<int>> outputs;
        const fs::path dir = out / ds.id;
        fs::create_directories(dir);
        for (int k : ks) {
            const auto res =
                optimise_dataset(spec, ds.geometry, k, ds.references.labelings, ds.external, cfg.generators);
            const std::string rel = ds.id + "/" + spec.name() + ".k" + std::to_string(k) + ".labels";
            save_labels(res.best.labels(), out / rel);
            r.labels.push_back(rel);
            r.gini.push_back(cluster_size_gini(res.best));
            r.m.push_back(res.trace.candidates);
            r.tabu.push_back(res.trace.tabu_size);
            outputs[k] = res.best.labels();
        }
        for (std::size_t j = 0; j < ds.references.size(); ++j)
            r.aris.push_back(adjusted_rand(ds.references.labelings[j], outputs.at(ds.references.cardinalities[j]), true));
        r.q = best_reference_score(outputs, ds.references);
        r.status = "ok";
    } catch (const std::exception& e) {
        r.status = "failed";
        r.message = e.what();
        r.labels.clear();
        r.aris.clear();
        r.gini.clear();
        r.m.clear();
        r.tabu.clear();
        r.q = 0.0;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

struct BenchmarkOutcome {
    std::vector<ResultsRecord> records;
    std::size_t failed = 0;
    std::size_t reused = 0;
};

/// Selects datasets per the include/exclude/smallest filters.
inline std::vector<BatteryEntry> select_datasets(const RunConfig& cfg) {
    auto all = discover_battery(cfg.battery_root);
    std::vector<BatteryEntry> keep;
    for (auto& e : all) {
        if (!cfg.include.empty() && !detail::matches(e.id, cfg.include)) continue;
        if (detail::matches(e.id, cfg.exclude)) continue;
        keep.push_back(std::move(e));
    }
    if (cfg.smallest > 0 && keep.size() > cfg.smallest) {
        std::vector<std::pair<std::size_t, std::size_t>> sized;
        for (std::size_t i = 0; i < keep.size(); ++i) sized.emplace_back(count_labels(keep[i].labels.front()), i);
        std::stable_sort(sized.begin(), sized.end());
        std::vector<BatteryEntry> small;
        for (std::size_t i = 0; i < cfg.smallest; ++i) small.push_back(keep[sized[i].second]);
        std::sort(small.begin(), small.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        keep = std::move(small);
    }
    return keep;
}

/// Runs every selected (dataset, index) pair not already completed in
/// <out>/records.csv. records.csv is rewritten, in dataset then index
/// order, after every finished job.
inline BenchmarkOutcome run_benchmark(const RunConfig& cfg, const ProgressLog& log = {}) {
    const auto say = [&](const std::string& s) {
        if (log) log(s);
    };
    fs::create_directories(cfg.output);
    {
        std::ofstream snap(cfg.output / "config.json");
        snap << to_json(cfg).dump(2) << '\n';
    }
    const auto datasets = select_datasets(cfg);
    if (datasets.empty()) throw ConfigError("no datasets selected under " + cfg.battery_root.string());

    std::map<std::pair<std::string, std::string>, ResultsRecord> done;
    const fs::path records_path = cfg.output / "records.csv";
    BenchmarkOutcome outcome;
    if (fs::exists(records_path))
        for (auto& r : load_records(records_path))
            if (r.status == "ok" || r.status == "skipped") done.emplace(std::make_pair(r.dataset, r.method), std::move(r));

    std::vector<std::string> order_ids;
    for (const auto& e : datasets) order_ids.push_back(e.id);
    std::map<std::string, double> seconds;
    if (const fs::path tp = cfg.output / "timings.csv"; fs::exists(tp)) {
        const auto rows = csv::parse(detail::read_text(tp));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].size() != 3 || !done.count({rows[i][0], rows[i][1]})) continue;
            try {
                seconds[rows[i][0] + "\t" + rows[i][1]] = std::stod(rows[i][2]);
            } catch (const std::logic_error&) {
                // an unreadable timing is dropped, the record is kept
            }
        }
    }

    std::mutex writer;
    const auto flush = [&] {
        std::string text = std::string(records_header()) + "\n";
        std::string times = "dataset,method,seconds\n";
        for (const auto& id : order_ids)
            for (const auto& spec : cfg.indices) {
                const auto it = done.find({id, spec.name()});
                if (it == done.end()) continue;
                text += to_csv_row(it->second) + "\n";
                const auto st = seconds.find(id + "\t" + spec.name());
                if (st != seconds.end())
                    times += csv::quote(id) + "," + csv::quote(spec.name()) + "," + csv::number(st->second) + "\n";
            }
        detail::write_atomically(records_path, text);
        detail::write_atomically(cfg.output / "timings.csv", times);
    };

    for (const auto& entry : datasets) {
        std::vector<const CviSpec*> todo;
        for (const auto& spec : cfg.indices)
            if (!done.count({entry.id, spec.name()})) todo.push_back(&spec);
            else ++outcome.reused;
        if (todo.empty()) continue;

        std::optional<PreparedDataset> prepared;
        try {
            prepared = prepare_dataset(entry, cfg);
        } catch (const std::exception& e) {
            for (const CviSpec* s : todo) {
                ResultsRecord r;
                r.dataset = entry.id;
                r.method = s->name();
                r.status = "failed";
                r.message = e.what();
                done[{entry.id, s->name()}] = r;
                ++outcome.failed;
            }
            std::lock_guard lock(writer);
            flush();
            say(entry.id + ": failed to load: " + e.what());
            continue;
        }
        say(entry.id + ": n=" + std::to_string(prepared->geometry->size()) + ", " + std::to_string(todo.size()) +
            " indices");

        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (;;) {
                const std::size_t j = next.fetch_add(1);
                if (j >= todo.size()) return;
                ResultsRecord r = run_job(*prepared, *todo[j], cfg, cfg.output);
                std::lock_guard lock(writer);
                if (r.status == "failed") ++outcome.failed;
                say(entry.id + " " + r.method + ": " + r.status +
                    (r.status == "ok" ? " Q=" + csv::number(r.q) : " (" + r.message + ")"));
                seconds[entry.id + "\t" + r.method] = r.seconds;
                done[{entry.id, r.method}] = std::move(r);
                flush();
            }
        };
        const std::size_t threads = std::min(cfg.jobs, todo.size());
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        }
    }

    for (const auto& id : order_ids)
        for (const auto& spec : cfg.indices) {
            const auto it = done.find({id, spec.name()});
            if (it != done.end()) outcome.records.push_back(it->second);
        }
    return outcome;
}

// ---------------------------------------------------------------------------
// Summaries

struct MethodSummary {
    std::string method;
    std::size_t count = 0;
    double mean = 0.0, sd = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0;
};

/// Per-method statistics of Q over datasets with status ok, in order of
/// first appearance.
inline std::vector<MethodSummary> summarize(std::span<const ResultsRecord> records) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> qs;
    for (const auto& r : records) {
        if (r.status != "ok") continue;
        if (!qs.count(r.method)) order.push_back(r.method);
        qs[r.method].push_back(r.q);
    }
    if (order.empty()) throw EmptyInputError("no completed records to summarise");
    std::vector<MethodSummary> out;
    for (const auto& m : order) {
        const auto& v = qs[m];
        out.push_back({m, v.size(), stats::mean(v), stats::sd(v), stats::quantile(v, 0.25), stats::median(v),
                       stats::quantile(v, 0.75)});
    }
    return out;
}

inline std::string summary_csv(std::span<const MethodSummary> rows) {
    std::string s = "method,count,mean,sd,q1,median,q3\n";
    for (const auto& r : rows)
        s += csv::quote(r.method) + "," + std::to_string(r.count) + "," + csv::number(r.mean) + "," +
             csv::number(r.sd) + "," + csv::number(r.q1) + "," + csv::number(r.median) + "," + csv::number(r.q3) +
             "\n";
    return s;
}

/// Per-method outputs keyed "dataset/k", read back from the labels files.
inline std::pair<std::vector<std::string>, std::vector<MethodOutputs>> collect_outputs(
    std::span<const ResultsRecord> records, const fs::path& out) {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    std::vector<MethodOutputs> outputs;
    for (const auto& r : records) {
        if (r.status != "ok") continue;
        if (r.labels.size() != r.ks.size()) throw FormatError("record for " + r.dataset + " lacks labels paths");
        auto [it, fresh] = index.emplace(r.method, names.size());
        if (fresh) {
            names.push_back(r.method);
            outputs.emplace_back();
        }
        for (std::size_t j = 0; j < r.ks.size(); ++j) {
            const fs::path p = out / r.labels[j];
            outputs[it->second][r.dataset + "/" + std::to_string(r.ks[j])] = load_labels(p, count_labels(p));
        }
    }
    return {names, outputs};
}

/// Writes meta_<aggregator>.csv (merge list) and meta_methods.csv (leaf
/// ids) into `dest`. Returns the dendrogram.
inline Dendrogram meta_cluster(std::span<const ResultsRecord> records, const fs::path& out, Aggregator agg,
                               const fs::path& dest) {
    const auto [names, outputs] = collect_outputs(records, out);
    const auto diss = method_dissimilarity(outputs, agg);
    const auto dg = complete_linkage(diss);
    fs::create_directories(dest);
    std::string methods = "id,method\n";
    for (std::size_t i = 0; i < names.size(); ++i) methods += std::to_string(i) + "," + csv::quote(names[i]) + "\n";
    detail::write_atomically(dest / "meta_methods.csv", methods);
    detail::write_atomically(dest / ("meta_" + to_string(agg) + ".csv"), dendrogram_csv(dg));
    return dg;
}

}  // namespace cvopt
