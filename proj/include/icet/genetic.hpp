#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "icet/cost_eval.hpp"
#include "icet/dataset.hpp"
#include "icet/genome.hpp"
#include "icet/induction.hpp"
#include "icet/schema.hpp"

namespace icet {

// Table-4 defaults. total_trials / population_size fixes the generation
// count (1000/50 = 20).
struct GAConfig {
    int population_size = 50;
    int total_trials = 1000;
    double crossover_rate = 0.6;
    double mutation_rate = 0.001;
    double generation_gap = 1.0; // full replacement; kept for the record
    int elitism_count = 1;
    double rank_min = 0.75;
    std::uint64_t rng_seed = 123456789;
    bool binary_mode = false;
    bool seed_with_true_costs = false;
    int workers = 1;

    int generations() const {
        int g = population_size > 0 ? total_trials / population_size : 1;
        return g < 1 ? 1 : g;
    }
};

struct FitnessRecord {
    BiasIndividual individual;
    double fitness = 0.0; // average cost on the sub-testing set, dollars
    std::uint64_t sub_split_seed = 0;
};

struct GenerationStat {
    int generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    DecodedBias best_bias;
};

struct IcetResult {
    DecisionTree tree;
    DecodedBias best_bias;
    double best_fitness = 0.0;
    std::vector<GenerationStat> log;
};

// Unconditional first prices in dollars, per attribute; attributes without
// a usable schema entry get a nominal 1 (they are excluded from induction
// anyway).
std::vector<double> true_cost_vector(const Dataset& d, const TestCostSchema& schema);
std::vector<bool> unusable_mask(const Dataset& d, const TestCostSchema& schema);

// Induction parameters a decoded bias stands for. Binary mode feeds the
// true no-discount costs to ICF; real mode feeds the pseudo-costs.
InductionParams params_from_bias(const DecodedBias& bias, const std::vector<double>& true_costs,
                                 const std::vector<bool>& unusable, bool binary_mode);

// One trial: sub-split the training set with trial_seed, induce under the
// individual's bias, return average cost on the sub-testing set under the
// true schema and matrix.
double fitness(const BiasIndividual& ind, const Dataset& train, const TestCostSchema& schema,
               const ClassificationCostMatrix& matrix, std::uint64_t trial_seed,
               const std::vector<double>& true_costs, const std::vector<bool>& unusable);

// Record indexes sorted best-first (ties keep the earlier index).
std::vector<int> fitness_order(const std::vector<FitnessRecord>& records);

// Rank selection (linear, rank_min..2-rank_min, stochastic universal
// sampling), two-point crossover, per-bit mutation. The first
// elitism_count slots of the result carry the best records' individuals
// verbatim, in fitness_order.
std::vector<BiasIndividual> next_generation(const std::vector<FitnessRecord>& records,
                                            const GAConfig& cfg, std::mt19937_64& rng);

// The ICET outer loop; emits the tree induced on the full training set
// under the fittest bias found.
IcetResult icet(const Dataset& train, const TestCostSchema& schema,
                const ClassificationCostMatrix& matrix, const GAConfig& cfg);

} // namespace icet
