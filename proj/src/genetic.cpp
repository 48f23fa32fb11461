#include "icet/genetic.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "icet/splits.hpp"

namespace icet {

std::vector<double> true_cost_vector(const Dataset& d, const TestCostSchema& schema) {
    std::vector<double> costs(d.n_attributes(), 1.0);
    for (int a = 0; a < d.n_attributes(); ++a) {
        const TestCostEntry* e = schema.entry_for(d.attribute(a).name);
        if (e && e->usable) costs[a] = e->cost.dollars();
    }
    return costs;
}

std::vector<bool> unusable_mask(const Dataset& d, const TestCostSchema& schema) {
    std::vector<bool> mask(d.n_attributes(), false);
    for (int a = 0; a < d.n_attributes(); ++a) {
        const TestCostEntry* e = schema.entry_for(d.attribute(a).name);
        mask[a] = (e == nullptr) || !e->usable;
    }
    return mask;
}

InductionParams params_from_bias(const DecodedBias& bias, const std::vector<double>& true_costs,
                                 const std::vector<bool>& unusable, bool binary_mode) {
    InductionParams p;
    p.heuristic.kind = HeuristicKind::ICF;
    p.heuristic.costs = binary_mode ? true_costs : bias.pseudo_costs;
    p.heuristic.omega = bias.omega;
    p.cf = bias.cf;
    p.excluded.assign(unusable.begin(), unusable.end());
    for (std::size_t a = 0; a < bias.excluded.size() && a < p.excluded.size(); ++a)
        if (bias.excluded[a]) p.excluded[a] = true;
    return p;
}

double fitness(const BiasIndividual& ind, const Dataset& train, const TestCostSchema& schema,
               const ClassificationCostMatrix& matrix, std::uint64_t trial_seed,
               const std::vector<double>& true_costs, const std::vector<bool>& unusable) {
    SplitPair sub = sub_split(train, trial_seed);
    InductionParams p = params_from_bias(ind.decode(), true_costs, unusable, ind.binary_mode());
    DecisionTree tree = build_tree(sub.train, p);
    return mean_case_cost(tree, sub.test, schema, matrix);
}

std::vector<int> fitness_order(const std::vector<FitnessRecord>& records) {
    std::vector<int> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return records[a].fitness < records[b].fitness; });
    return order;
}

namespace {

// Parent pool via stochastic universal sampling over linear rank
// expectations (best = 2 - rank_min, worst = rank_min).
std::vector<int> select_parents(const std::vector<FitnessRecord>& records, double rank_min,
                                std::mt19937_64& rng) {
    const int p = static_cast<int>(records.size());
    std::vector<int> order = fitness_order(records);

    const double rank_max = 2.0 - rank_min;
    std::vector<double> expected(p);
    for (int r = 0; r < p; ++r)
        expected[r] = p == 1 ? 1.0 : rank_max - (rank_max - rank_min) * r / (p - 1.0);

    std::uniform_real_distribution<double> u(0.0, 1.0);
    double pointer = u(rng); // pointer spacing is 1: expectations sum to p
    std::vector<int> parents;
    parents.reserve(p);
    double cum = 0.0;
    int r = 0;
    for (int k = 0; k < p; ++k) {
        double target = pointer + k;
        while (r < p && cum + expected[r] <= target) cum += expected[r++];
        parents.push_back(order[std::min(r, p - 1)]);
    }

    // decorrelate mating pairs
    for (int i = p - 1; i > 0; --i) {
        int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(parents[i], parents[j]);
    }
    return parents;
}

} // namespace

std::vector<BiasIndividual> next_generation(const std::vector<FitnessRecord>& records,
                                            const GAConfig& cfg, std::mt19937_64& rng) {
    const int p = static_cast<int>(records.size());
    if (p != cfg.population_size)
        throw std::invalid_argument("next_generation: population size mismatch");

    std::vector<int> parents = select_parents(records, cfg.rank_min, rng);

    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<BiasIndividual> offspring;
    offspring.reserve(p);
    for (int i = 0; i < p; i += 2) {
        const BiasIndividual& a = records[parents[i]].individual;
        if (i + 1 >= p) {
            offspring.push_back(a.mutated(cfg.mutation_rate, rng));
            break;
        }
        const BiasIndividual& b = records[parents[i + 1]].individual;
        if (u(rng) < cfg.crossover_rate) {
            auto [c1, c2] = BiasIndividual::two_point_crossover(a, b, rng);
            offspring.push_back(c1.mutated(cfg.mutation_rate, rng));
            offspring.push_back(c2.mutated(cfg.mutation_rate, rng));
        } else {
            offspring.push_back(a.mutated(cfg.mutation_rate, rng));
            offspring.push_back(b.mutated(cfg.mutation_rate, rng));
        }
    }

    // elites survive verbatim in the leading slots
    std::vector<int> order = fitness_order(records);
    for (int e = 0; e < cfg.elitism_count && e < p; ++e)
        offspring[e] = records[order[e]].individual;
    return offspring;
}

namespace {

struct EvalPlan {
    const Dataset* train;
    const TestCostSchema* schema;
    const ClassificationCostMatrix* matrix;
    const std::vector<double>* true_costs;
    const std::vector<bool>* unusable;
};

// Evaluates individuals [first, last) with pre-assigned trial seeds;
// identical results for any worker count.
void evaluate_range(const EvalPlan& plan, std::vector<FitnessRecord>& records, int first, int last,
                    int workers) {
    auto eval_one = [&](int i) {
        records[i].fitness =
            fitness(records[i].individual, *plan.train, *plan.schema, *plan.matrix,
                    records[i].sub_split_seed, *plan.true_costs, *plan.unusable);
    };
    if (workers <= 1 || last - first <= 1) {
        for (int i = first; i < last; ++i) eval_one(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{first};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < last; i = next.fetch_add(1)) eval_one(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace

IcetResult icet(const Dataset& train, const TestCostSchema& schema,
                const ClassificationCostMatrix& matrix, const GAConfig& cfg) {
    if (train.n_cases() == 0) throw std::invalid_argument("icet: empty training set");

    const auto true_costs = true_cost_vector(train, schema);
    const auto unusable = unusable_mask(train, schema);
    const EvalPlan plan{&train, &schema, &matrix, &true_costs, &unusable};

    std::mt19937_64 rng(cfg.rng_seed);
    int trial = 0;

    std::vector<FitnessRecord> records(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) {
        records[i].individual = BiasIndividual::random(train.n_attributes(), cfg.binary_mode, rng);
        records[i].sub_split_seed = mix_seed(cfg.rng_seed, trial++);
    }
    if (cfg.seed_with_true_costs && !cfg.binary_mode)
        records[0].individual = BiasIndividual::seeded(true_costs, 1.0, 25.0);

    evaluate_range(plan, records, 0, cfg.population_size, cfg.workers);

    IcetResult result;
    auto note_generation = [&](int gen) {
        double sum = 0.0;
        for (const auto& r : records) sum += r.fitness;
        const FitnessRecord& best = records[fitness_order(records)[0]];
        result.log.push_back(
            {gen, best.fitness, sum / cfg.population_size, best.individual.decode()});
    };
    note_generation(1);

    FitnessRecord best_record = records[fitness_order(records)[0]];
    for (int gen = 2; gen <= cfg.generations(); ++gen) {
        std::vector<int> order = fitness_order(records);
        auto offspring = next_generation(records, cfg, rng);
        std::vector<FitnessRecord> next(cfg.population_size);
        for (int i = 0; i < cfg.population_size; ++i) {
            next[i].individual = std::move(offspring[i]);
            if (i < cfg.elitism_count) {
                // elites keep their recorded stochastic fitness
                next[i].fitness = records[order[i]].fitness;
                next[i].sub_split_seed = records[order[i]].sub_split_seed;
            } else {
                next[i].sub_split_seed = mix_seed(cfg.rng_seed, trial++);
            }
        }
        records = std::move(next);
        evaluate_range(plan, records, std::min(cfg.elitism_count, cfg.population_size),
                       cfg.population_size, cfg.workers);
        note_generation(gen);
        const FitnessRecord& gen_best = records[fitness_order(records)[0]];
        if (gen_best.fitness < best_record.fitness) best_record = gen_best;
    }

    result.best_bias = best_record.individual.decode();
    result.best_fitness = best_record.fitness;
    InductionParams p =
        params_from_bias(result.best_bias, true_costs, unusable, cfg.binary_mode);
    result.tree = build_tree(train, p);
    return result;
}

} // namespace icet
