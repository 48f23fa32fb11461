#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icet/cost_eval.hpp"
#include "icet/dataset.hpp"
#include "icet/genetic.hpp"
#include "icet/money.hpp"
#include "icet/schema.hpp"

namespace icet {

enum class Algorithm { ICET, EG2, CSID3, IDX, C45 };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& s);

enum class Variant { Baseline, NoDelay, NoDiscount, Ratios, Mismatch, Seeded, Binary, MutationOnly };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

struct BenchmarkPaths {
    std::string name;
    std::string descriptor_file;
    std::string schema_file;
    std::string data_file;
};

struct PreparedDataset {
    std::string name;
    Dataset data; // loaded, missing-policy applied
    TestCostSchema schema;
};

// Loads and preprocesses one benchmark; fails fast naming the missing file.
PreparedDataset prepare_dataset(const BenchmarkPaths& paths);

struct ExperimentConfig {
    std::vector<BenchmarkPaths> datasets;
    std::vector<Algorithm> algorithms = {Algorithm::ICET, Algorithm::EG2, Algorithm::CSID3,
                                         Algorithm::IDX, Algorithm::C45};
    std::vector<Money> error_costs = {
        Money::from_dollars(10),   Money::from_dollars(50),   Money::from_dollars(100),
        Money::from_dollars(500),  Money::from_dollars(1000), Money::from_dollars(5000),
        Money::from_dollars(10000)};
    int splits = 10;
    Variant variant = Variant::Baseline;
    double mutation_only_rate = 0.10;
    Money mismatch_train_cost = Money::from_dollars(100);
    std::vector<Money> mismatch_test_costs = {Money::from_dollars(50), Money::from_dollars(100),
                                              Money::from_dollars(500)};
    bool desk_scale = false; // splits=3, trials=200, population=20
    std::uint64_t seed = 123456789;
    int workers = 1;
    int ga_population = 50;
    int ga_trials = 1000;
    int min_cases_per_leaf = 2;

    int effective_splits() const { return desk_scale ? std::min(splits, 3) : splits; }
    int effective_population() const { return desk_scale ? 20 : ga_population; }
    int effective_trials() const { return desk_scale ? 200 : ga_trials; }
};

struct ResultRow {
    std::string dataset;
    std::string algorithm;
    double cost = 0.0; // misclassification cost k, or the neg/pos ratio
    int split = 0;
    double average_cost = 0.0;
    double normalized_cost_pct = 0.0;
    double test_expenditure_pct = 0.0;
    double error_rate_pct = 0.0;
    double wall_time_s = 0.0;
};

struct ExperimentOutput {
    std::vector<ResultRow> rows;              // canonically sorted
    std::vector<std::string> ga_log_lines;    // dataset,split,cost,generation,best,mean
};

// Runs every (dataset x algorithm x cost x split) cell. The canonical
// splits come from the config seed alone, so every variant sees the same
// pairs. Trees of the cost-blind algorithms are induced once per split and
// re-costed per error cost.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

struct SummaryRow {
    std::string algorithm;
    double mean = 0.0;
    double half_width = 0.0; // 1.96 * sd / sqrt(splits)
};

// Per-dataset normalized costs averaged over the [lo, hi] cost window,
// then across datasets with equal weight; the confidence half-width comes
// from the split-level variation of the dataset-averaged figure.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows, double lo, double hi);

// rows.csv round-trip (stable column order, deterministic formatting).
void write_rows(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> read_rows(const std::string& path);

std::string summary_markdown(const std::vector<ResultRow>& rows,
                             const std::vector<std::pair<double, double>>& windows);

// rows.csv + summary.md + cost/expenditure plots (one panel per dataset
// plus the all-dataset average). Throws on an empty row set before
// touching the directory.
void emit_outputs(const ExperimentOutput& out, const ExperimentConfig& cfg,
                  const std::string& out_dir);

} // namespace icet
