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


// Command-line front end.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>

#include "cvopt/cvopt.hpp"

namespace {

using namespace cvopt;

Dataset load_input(const std::string& path, bool raw, std::uint64_t seed) {
    Dataset ds = load_dataset(path);
    return raw ? ds : preprocess(ds, seed);
}

int max_label(const std::vector<int>& labels) {
    int k = 0;
    for (int v : labels) k = std::max(k, v);
    return k;
}

void print_csv_or_save(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") std::cout << text;
    else detail::write_text(out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster validity indices as objective functions"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a benchmark described by a JSON config");
    std::string config_path;
    std::size_t jobs_override = 0;
    bool quiet = false;
    run->add_option("-c,--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
    run->add_option("-j,--jobs", jobs_override, "Worker threads (overrides config)");
    run->add_flag("-q,--quiet", quiet, "No progress output");

    // cvi
    auto* cvi = app.add_subcommand("cvi", "Evaluate one index on a labelled dataset");
    std::string data_path, labels_path, index_name;
    std::uint64_t seed = 42;
    bool raw = false;
    cvi->add_option("-d,--data", data_path, "Data matrix file")->required();
    cvi->add_option("-l,--labels", labels_path, "Label file (1..k)")->required();
    cvi->add_option("-i,--index", index_name, "Index name, e.g. GDunn_d1_D1")->required();
    cvi->add_option("-s,--seed", seed, "Preprocessing seed");
    cvi->add_flag("--raw", raw, "Skip preprocessing");

    // optimize
    auto* opt = app.add_subcommand("optimize", "Maximise one index on one dataset");
    int k = 0;
    std::vector<std::string> reference_paths, candidate_dirs;
    std::string out_path;
    GeneratorConfig gen;
    opt->add_option("-d,--data", data_path, "Data matrix file")->required();
    opt->add_option("-i,--index", index_name, "Index name")->required();
    opt->add_option("-k,--k", k, "Number of clusters")->required()->check(CLI::PositiveNumber);
    opt->add_option("-r,--reference", reference_paths, "Reference label files used as candidates");
    opt->add_option("-C,--candidates", candidate_dirs, "Directories of candidate label files");
    opt->add_option("-P", gen.P, "Steps without improvement before moving on");
    opt->add_option("-s,--seed", gen.seed, "Seed for preprocessing and generators");
    opt->add_option("--random", gen.random_count, "Random candidates");
    opt->add_option("--vantage", gen.vantage_count, "Vantage-point candidates");
    opt->add_option("-V", gen.vantage_V, "Vantage points per cluster");
    opt->add_option("--kmeans-restarts", gen.kmeans_restarts, "k-means restarts (0 disables)");
    opt->add_option("-o,--out", out_path, "Output label file")->required();
    opt->add_flag("--raw", raw, "Skip preprocessing");

    // score
    auto* score = app.add_subcommand("score", "ARI and Q of label files against references");
    std::vector<std::string> output_paths;
    score->add_option("-l,--labels", output_paths, "Output label files, one per k")->required();
    score->add_option("-r,--reference", reference_paths, "Reference label files")->required();

    // summarize
    auto* summ = app.add_subcommand("summarize", "Per-method statistics of Q from records.csv");
    std::string records_path;
    std::string summary_out;
    summ->add_option("-r,--records", records_path, "records.csv")->required()->check(CLI::ExistingFile);
    summ->add_option("-o,--out", summary_out, "Output CSV (default stdout)");

    // meta-cluster
    auto* meta = app.add_subcommand("meta-cluster", "Complete-linkage grouping of methods");
    std::string aggregator = "all";
    std::string dest;
    meta->add_option("-r,--records", records_path, "records.csv")->required()->check(CLI::ExistingFile);
    meta->add_option("-a,--aggregator", aggregator, "mean, median, q3 or all")
        ->check(CLI::IsMember({"mean", "median", "q3", "all"}));
    meta->add_option("-o,--out-dir", dest, "Destination directory (default: next to records.csv)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            RunConfig cfg = load_run_config(config_path);
            if (jobs_override > 0) cfg.jobs = jobs_override;
            ProgressLog log;
            if (!quiet) log = [](const std::string& s) { std::cerr << s << '\n'; };
            const auto outcome = run_benchmark(cfg, log);
            std::cerr << outcome.records.size() << " records (" << outcome.reused << " reused), " << outcome.failed
                      << " failed\n";
            return outcome.failed == 0 ? 0 : 1;
        }
        if (*cvi) {
            const auto spec = CviSpec::parse(index_name);
            const Geometry geo(load_input(data_path, raw, seed));
            const auto labels = file_to_internal(load_labels(labels_path, geo.size()));
            const auto p = Partition::from_labels(labels);
            std::printf("%s\t%.17g\n", spec.name().c_str(), evaluate(spec, geo, p));
            return 0;
        }
        if (*opt) {
            const auto spec = CviSpec::parse(index_name);
            const auto geo = std::make_shared<const Geometry>(load_input(data_path, raw, gen.seed));
            std::vector<std::vector<int>> refs;
            for (const auto& r : reference_paths) refs.push_back(load_labels(r, geo->size()));
            std::vector<std::filesystem::path> dirs(candidate_dirs.begin(), candidate_dirs.end());
            const auto external = load_candidate_dirs(dirs, geo->size());
            const auto res = optimise_dataset(spec, geo, k, refs, external, gen);
            save_labels(res.best.labels(), out_path);
            std::printf("%s\t%.17g\tm=%zu\ttabu=%zu\n", spec.name().c_str(), res.value, res.trace.candidates,
                        res.trace.tabu_size);
            return 0;
        }
        if (*score) {
            std::vector<std::vector<int>> refs;
            std::size_t n = count_labels(reference_paths.front());
            for (const auto& r : reference_paths) refs.push_back(load_labels(r, n));
            const auto rs = ReferenceSet::from_labelings(refs);
            std::map<int, std::vector<int>> outputs;
            for (const auto& o : output_paths) {
                auto l = load_labels(o, n);
                const int kk = max_label(l);
                if (!outputs.emplace(kk, std::move(l)).second)
                    throw ParameterError("two output files with k = " + std::to_string(kk));
            }
            for (std::size_t j = 0; j < rs.size(); ++j) {
                const auto it = outputs.find(rs.cardinalities[j]);
                if (it == outputs.end()) continue;
                std::printf("%s\tk=%d\tARI=%.17g\n", reference_paths[j].c_str(), rs.cardinalities[j],
                            adjusted_rand(rs.labelings[j], it->second, true));
            }
            std::printf("Q\t%.17g\n", best_reference_score(outputs, rs));
            return 0;
        }
        if (*summ) {
            const auto records = load_records(records_path);
            print_csv_or_save(summary_csv(summarize(records)), summary_out);
            return 0;
        }
        if (*meta) {
            const auto records = load_records(records_path);
            const std::filesystem::path root = std::filesystem::path(records_path).parent_path();
            const std::filesystem::path where = dest.empty() ? root : std::filesystem::path(dest);
            const std::vector<Aggregator> aggs = aggregator == "all"
                                                     ? std::vector{Aggregator::Mean, Aggregator::Median, Aggregator::Q3}
                                                     : std::vector{parse_aggregator(aggregator)};
            for (auto a : aggs) {
                meta_cluster(records, root, a, where);
                std::cerr << "wrote " << (where / ("meta_" + to_string(a) + ".csv")).string() << '\n';
            }
            return 0;
        }
    } catch (const cvopt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
