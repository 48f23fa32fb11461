#include "icet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "icet/imputation.hpp"
#include "icet/splits.hpp"
#include "svg_plot.hpp"

namespace icet {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::ICET: return "ICET";
        case Algorithm::EG2: return "EG2";
        case Algorithm::CSID3: return "CS-ID3";
        case Algorithm::IDX: return "IDX";
        case Algorithm::C45: return "C4.5";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& s) {
    std::string t;
    for (char c : s) t.push_back(std::tolower(static_cast<unsigned char>(c)));
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '-' || c == '.'; }),
            t.end());
    if (t == "icet") return Algorithm::ICET;
    if (t == "eg2") return Algorithm::EG2;
    if (t == "csid3") return Algorithm::CSID3;
    if (t == "idx") return Algorithm::IDX;
    if (t == "c45") return Algorithm::C45;
    return std::nullopt;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Baseline: return "baseline";
        case Variant::NoDelay: return "no-delay";
        case Variant::NoDiscount: return "no-discount";
        case Variant::Ratios: return "ratios";
        case Variant::Mismatch: return "mismatch";
        case Variant::Seeded: return "seeded";
        case Variant::Binary: return "binary";
        case Variant::MutationOnly: return "mutation-only";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
    for (Variant v : {Variant::Baseline, Variant::NoDelay, Variant::NoDiscount, Variant::Ratios,
                      Variant::Mismatch, Variant::Seeded, Variant::Binary, Variant::MutationOnly})
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

PreparedDataset prepare_dataset(const BenchmarkPaths& paths) {
    namespace fs = std::filesystem;
    for (const std::string* p : {&paths.descriptor_file, &paths.schema_file, &paths.data_file})
        if (!fs::exists(*p))
            throw std::runtime_error("dataset '" + paths.name + "': expected file " + *p);

    PreparedDataset out;
    out.name = paths.name;
    auto desc = DatasetDescriptor::load(paths.descriptor_file);
    out.data = load_dataset(paths.data_file, desc);
    out.schema = TestCostSchema::load(paths.schema_file);

    switch (desc.missing) {
        case DatasetDescriptor::MissingPolicy::Drop:
            out.data = drop_missing_cases(out.data);
            break;
        case DatasetDescriptor::MissingPolicy::Impute:
            out.data = impute_nearest_neighbor(out.data);
            break;
        case DatasetDescriptor::MissingPolicy::None:
            if (out.data.missing_count() > 0)
                throw std::runtime_error("dataset '" + paths.name +
                                         "' has missing values; descriptor needs a "
                                         "'missing drop' or 'missing impute' policy");
            break;
    }
    for (const auto& label : out.data.classes())
        if (!out.schema.has_polarity(label))
            throw std::runtime_error("schema for '" + paths.name + "' lacks a polarity for class '" +
                                     label + "'");
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct CostPoint {
    double label = 0.0;
    ClassificationCostMatrix eval_matrix;
    double standard = 0.0; // dollars
};

struct DatasetContext {
    PreparedDataset prep;
    TestCostSchema eval_schema;
    Money max_test_expenditure;
    std::vector<SplitPair> splits;
    std::vector<std::uint64_t> split_seeds;
    std::vector<CostPoint> points;
    std::vector<double> true_costs;
    std::vector<bool> unusable;

    // mismatch only: the single training matrix
    ClassificationCostMatrix train_matrix;
    bool has_train_matrix = false;
};

InductionParams fixed_algo_params(Algorithm a, const DatasetContext& ctx, int min_cases) {
    InductionParams p;
    p.min_cases_per_leaf = min_cases;
    p.cf = 25.0;
    p.excluded.assign(ctx.unusable.begin(), ctx.unusable.end());
    switch (a) {
        case Algorithm::C45:
            p.heuristic.kind = HeuristicKind::GainRatio;
            break;
        case Algorithm::EG2:
            p.heuristic.kind = HeuristicKind::ICF;
            p.heuristic.costs = ctx.true_costs;
            p.heuristic.omega = 1.0;
            break;
        case Algorithm::CSID3:
            p.heuristic.kind = HeuristicKind::CSID3;
            p.heuristic.costs = ctx.true_costs;
            break;
        case Algorithm::IDX:
            p.heuristic.kind = HeuristicKind::IDX;
            p.heuristic.costs = ctx.true_costs;
            break;
        case Algorithm::ICET:
            break;
    }
    return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DatasetContext make_context(const BenchmarkPaths& paths, const ExperimentConfig& cfg) {
    DatasetContext ctx;
    ctx.prep = prepare_dataset(paths);

    switch (cfg.variant) {
        case Variant::NoDelay: ctx.eval_schema = ctx.prep.schema.all_immediate(); break;
        case Variant::NoDiscount: ctx.eval_schema = ctx.prep.schema.without_group_discounts(); break;
        default: ctx.eval_schema = ctx.prep.schema; break;
    }
    ctx.max_test_expenditure = total_test_cost(ctx.eval_schema);
    ctx.true_costs = true_cost_vector(ctx.prep.data, ctx.prep.schema);
    ctx.unusable = unusable_mask(ctx.prep.data, ctx.prep.schema);

    const std::uint64_t ds_seed = mix_seed(cfg.seed, fnv1a(paths.name));
    for (int i = 0; i < cfg.effective_splits(); ++i) {
        std::uint64_t s = mix_seed(ds_seed, static_cast<std::uint64_t>(i));
        ctx.split_seeds.push_back(s);
        ctx.splits.push_back(random_split(ctx.prep.data, s));
    }

    const auto& classes = ctx.prep.data.classes();
    auto add_point = [&](double label, Money pos, Money neg) {
        CostPoint pt;
        pt.label = label;
        pt.eval_matrix = make_cost_matrix(ctx.prep.schema, classes, pos, neg);
        pt.standard = standard_cost(ctx.prep.data, ctx.eval_schema, pt.eval_matrix);
        ctx.points.push_back(std::move(pt));
    };

    switch (cfg.variant) {
        case Variant::Ratios:
            // negative:positive from 0.125 to 8, pivoting around $50
            for (auto [neg, pos] : std::vector<std::pair<int, int>>{
                     {50, 400}, {50, 200}, {50, 100}, {50, 50}, {100, 50}, {200, 50}, {400, 50}})
                add_point(static_cast<double>(neg) / pos, Money::from_dollars(pos),
                          Money::from_dollars(neg));
            break;
        case Variant::Mismatch:
            for (Money k : cfg.mismatch_test_costs) add_point(k.dollars(), k, k);
            ctx.train_matrix =
                make_cost_matrix(ctx.prep.schema, classes, cfg.mismatch_train_cost,
                                 cfg.mismatch_train_cost);
            ctx.has_train_matrix = true;
            break;
        default:
            for (Money k : cfg.error_costs) add_point(k.dollars(), k, k);
            break;
    }
    return ctx;
}

} // namespace

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
    if (cfg.datasets.empty()) throw std::invalid_argument("run_experiment: no datasets");
    if (cfg.splits < 1) throw std::invalid_argument("run_experiment: splits must be >= 1");

    std::vector<DatasetContext> contexts;
    contexts.reserve(cfg.datasets.size());
    for (const auto& paths : cfg.datasets) contexts.push_back(make_context(paths, cfg));

    const bool wants_icet = std::count(cfg.algorithms.begin(), cfg.algorithms.end(),
                                       Algorithm::ICET) > 0;

    ExperimentOutput out;
    std::mutex sink;
    std::vector<std::function<void()>> jobs;

    for (const auto& ctx : contexts) {
        // cost-blind algorithms: one tree per split, re-costed per point
        for (Algorithm a : cfg.algorithms) {
            if (a == Algorithm::ICET) continue;
            jobs.emplace_back([&ctx, a, &cfg, &out, &sink] {
                InductionParams params = fixed_algo_params(a, ctx, cfg.min_cases_per_leaf);
                std::vector<ResultRow> rows;
                for (std::size_t s = 0; s < ctx.splits.size(); ++s) {
                    auto t0 = std::chrono::steady_clock::now();
                    DecisionTree tree = build_tree(ctx.splits[s].train, params);
                    double induce_time = seconds_since(t0);
                    for (std::size_t p = 0; p < ctx.points.size(); ++p) {
                        const CostPoint& pt = ctx.points[p];
                        auto t1 = std::chrono::steady_clock::now();
                        EvaluationReport rep =
                            average_cost(tree, ctx.splits[s].test, ctx.eval_schema, pt.eval_matrix,
                                         {pt.standard, ctx.max_test_expenditure});
                        ResultRow row;
                        row.dataset = ctx.prep.name;
                        row.algorithm = algorithm_name(a);
                        row.cost = pt.label;
                        row.split = static_cast<int>(s);
                        row.average_cost = rep.average_cost;
                        row.normalized_cost_pct = rep.normalized_cost_pct;
                        row.test_expenditure_pct = rep.test_expenditure_pct;
                        row.error_rate_pct = rep.error_rate_pct;
                        row.wall_time_s = seconds_since(t1) + (p == 0 ? induce_time : 0.0);
                        rows.push_back(std::move(row));
                    }
                }
                std::lock_guard<std::mutex> lock(sink);
                out.rows.insert(out.rows.end(), rows.begin(), rows.end());
            });
        }

        if (!wants_icet) continue;

        if (cfg.variant == Variant::Mismatch) {
            // train once per split with the training penalty, re-cost per point
            for (std::size_t s = 0; s < ctx.splits.size(); ++s) {
                jobs.emplace_back([&ctx, s, &cfg, &out, &sink] {
                    GAConfig ga;
                    ga.population_size = cfg.effective_population();
                    ga.total_trials = cfg.effective_trials();
                    ga.rng_seed = mix_seed(ctx.split_seeds[s], 1000003);
                    auto t0 = std::chrono::steady_clock::now();
                    IcetResult res = icet(ctx.splits[s].train, ctx.eval_schema, ctx.train_matrix, ga);
                    double ga_time = seconds_since(t0);

                    std::vector<ResultRow> rows;
                    std::vector<std::string> log_lines;
                    for (std::size_t p = 0; p < ctx.points.size(); ++p) {
                        const CostPoint& pt = ctx.points[p];
                        auto t1 = std::chrono::steady_clock::now();
                        EvaluationReport rep =
                            average_cost(res.tree, ctx.splits[s].test, ctx.eval_schema,
                                         pt.eval_matrix, {pt.standard, ctx.max_test_expenditure});
                        ResultRow row;
                        row.dataset = ctx.prep.name;
                        row.algorithm = algorithm_name(Algorithm::ICET);
                        row.cost = pt.label;
                        row.split = static_cast<int>(s);
                        row.average_cost = rep.average_cost;
                        row.normalized_cost_pct = rep.normalized_cost_pct;
                        row.test_expenditure_pct = rep.test_expenditure_pct;
                        row.error_rate_pct = rep.error_rate_pct;
                        row.wall_time_s = seconds_since(t1) + (p == 0 ? ga_time : 0.0);
                        rows.push_back(std::move(row));
                    }
                    for (const auto& g : res.log) {
                        std::ostringstream os;
                        os << ctx.prep.name << "," << s << "," << cfg.mismatch_train_cost.dollars()
                           << "," << g.generation << "," << g.best_fitness << ","
                           << g.mean_fitness;
                        log_lines.push_back(os.str());
                    }
                    std::lock_guard<std::mutex> lock(sink);
                    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
                    out.ga_log_lines.insert(out.ga_log_lines.end(), log_lines.begin(),
                                            log_lines.end());
                });
            }
            continue;
        }

        for (std::size_t s = 0; s < ctx.splits.size(); ++s) {
            for (std::size_t p = 0; p < ctx.points.size(); ++p) {
                jobs.emplace_back([&ctx, s, p, &cfg, &out, &sink] {
                    const CostPoint& pt = ctx.points[p];
                    GAConfig ga;
                    ga.population_size = cfg.effective_population();
                    ga.total_trials = cfg.effective_trials();
                    ga.binary_mode = (cfg.variant == Variant::Binary);
                    ga.seed_with_true_costs = (cfg.variant == Variant::Seeded);
                    if (cfg.variant == Variant::MutationOnly) {
                        ga.crossover_rate = 0.0;
                        ga.mutation_rate = cfg.mutation_only_rate;
                    }
                    ga.rng_seed = mix_seed(ctx.split_seeds[s], 1000003 + p);

                    auto t0 = std::chrono::steady_clock::now();
                    IcetResult res = icet(ctx.splits[s].train, ctx.eval_schema, pt.eval_matrix, ga);
                    EvaluationReport rep =
                        average_cost(res.tree, ctx.splits[s].test, ctx.eval_schema, pt.eval_matrix,
                                     {pt.standard, ctx.max_test_expenditure});
                    ResultRow row;
                    row.dataset = ctx.prep.name;
                    row.algorithm = algorithm_name(Algorithm::ICET);
                    row.cost = pt.label;
                    row.split = static_cast<int>(s);
                    row.average_cost = rep.average_cost;
                    row.normalized_cost_pct = rep.normalized_cost_pct;
                    row.test_expenditure_pct = rep.test_expenditure_pct;
                    row.error_rate_pct = rep.error_rate_pct;
                    row.wall_time_s = seconds_since(t0);

                    std::vector<std::string> log_lines;
                    for (const auto& g : res.log) {
                        std::ostringstream os;
                        os << ctx.prep.name << "," << s << "," << pt.label << "," << g.generation
                           << "," << g.best_fitness << "," << g.mean_fitness;
                        log_lines.push_back(os.str());
                    }
                    std::lock_guard<std::mutex> lock(sink);
                    out.rows.push_back(std::move(row));
                    out.ga_log_lines.insert(out.ga_log_lines.end(), log_lines.begin(),
                                            log_lines.end());
                });
            }
        }
    }

    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (auto& job : jobs) job();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    jobs[i]();
            });
        for (auto& t : pool) t.join();
    }

    // canonical order so concurrency never changes the output bytes
    auto key = [](const ResultRow& r) {
        return std::make_tuple(r.dataset, r.algorithm, r.cost, r.split);
    };
    std::sort(out.rows.begin(), out.rows.end(),
              [&](const ResultRow& a, const ResultRow& b) { return key(a) < key(b); });
    std::sort(out.ga_log_lines.begin(), out.ga_log_lines.end());
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows, double lo, double hi) {
    if (rows.empty()) throw std::invalid_argument("summarize: no rows");

    // algorithm -> (dataset, split) -> window mean of normalized cost
    std::map<std::string, std::map<std::pair<std::string, int>, std::pair<double, int>>> acc;
    for (const auto& r : rows) {
        if (r.cost < lo - 1e-9 || r.cost > hi + 1e-9) continue;
        auto& cell = acc[r.algorithm][{r.dataset, r.split}];
        cell.first += r.normalized_cost_pct;
        cell.second += 1;
    }

    std::vector<SummaryRow> out;
    for (auto& [algo, cells] : acc) {
        // split -> (sum over datasets, count)
        std::map<int, std::pair<double, int>> by_split;
        for (auto& [key, cell] : cells) {
            auto& slot = by_split[key.second];
            slot.first += cell.first / cell.second;
            slot.second += 1;
        }
        std::vector<double> split_values;
        for (auto& [split, slot] : by_split) split_values.push_back(slot.first / slot.second);

        double mean = 0.0;
        for (double v : split_values) mean += v;
        mean /= static_cast<double>(split_values.size());

        double var = 0.0;
        if (split_values.size() > 1) {
            for (double v : split_values) var += (v - mean) * (v - mean);
            var /= static_cast<double>(split_values.size() - 1);
        }
        SummaryRow s;
        s.algorithm = algo;
        s.mean = mean;
        s.half_width = 1.96 * std::sqrt(var / static_cast<double>(split_values.size()));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const SummaryRow& a, const SummaryRow& b) { return a.mean < b.mean; });
    return out;
}

namespace {

std::string fmt_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string fmt_cost(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

void write_rows(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("cannot write " + path);
    outf << "dataset,algorithm,cost,split,average_cost,normalized_cost_pct,"
            "test_expenditure_pct,error_rate_pct,wall_time_s\n";
    for (const auto& r : rows) {
        outf << r.dataset << ',' << r.algorithm << ',' << fmt_cost(r.cost) << ',' << r.split << ','
             << fmt_double(r.average_cost, 6) << ',' << fmt_double(r.normalized_cost_pct, 6) << ','
             << fmt_double(r.test_expenditure_pct, 6) << ',' << fmt_double(r.error_rate_pct, 6)
             << ',' << fmt_double(r.wall_time_s, 3) << '\n';
    }
}

std::vector<ResultRow> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty row file");

    std::vector<ResultRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string field;
        std::istringstream is(line);
        while (std::getline(is, field, ',')) f.push_back(field);
        if (f.size() != 9)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 9 fields");
        ResultRow r;
        r.dataset = f[0];
        r.algorithm = f[1];
        r.cost = std::stod(f[2]);
        r.split = std::stoi(f[3]);
        r.average_cost = std::stod(f[4]);
        r.normalized_cost_pct = std::stod(f[5]);
        r.test_expenditure_pct = std::stod(f[6]);
        r.error_rate_pct = std::stod(f[7]);
        r.wall_time_s = std::stod(f[8]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string summary_markdown(const std::vector<ResultRow>& rows,
                             const std::vector<std::pair<double, double>>& windows) {
    std::ostringstream os;
    os << "# Average classification cost as percentage of standard cost\n";
    for (auto [lo, hi] : windows) {
        os << "\n## Misclassification error costs from " << fmt_cost(lo) << " to " << fmt_cost(hi)
           << "\n\n";
        os << "| Algorithm | mean +/- 95% |\n|---|---|\n";
        for (const auto& s : summarize(rows, lo, hi))
            os << "| " << s.algorithm << " | " << fmt_double(s.mean, 1) << " +/- "
               << fmt_double(s.half_width, 1) << " |\n";
    }
    return os.str();
}

namespace {

// (dataset, algorithm, cost) -> mean over splits of one row field
std::map<std::string, std::map<std::string, std::map<double, double>>> collect_means(
    const std::vector<ResultRow>& rows, double ResultRow::* field) {
    std::map<std::string, std::map<std::string, std::map<double, std::pair<double, int>>>> acc;
    for (const auto& r : rows) {
        auto& cell = acc[r.dataset][r.algorithm][r.cost];
        cell.first += r.*field;
        cell.second += 1;
    }
    std::map<std::string, std::map<std::string, std::map<double, double>>> out;
    for (auto& [ds, algos] : acc)
        for (auto& [algo, costs] : algos)
            for (auto& [cost, cell] : costs) out[ds][algo][cost] = cell.first / cell.second;
    return out;
}

} // namespace

void emit_outputs(const ExperimentOutput& out, const ExperimentConfig& cfg,
                  const std::string& out_dir) {
    if (out.rows.empty()) throw std::runtime_error("emit_outputs: no result rows");
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    write_rows(out.rows, out_dir + "/rows.csv");

    double lo = out.rows.front().cost, hi = lo;
    for (const auto& r : out.rows) {
        lo = std::min(lo, r.cost);
        hi = std::max(hi, r.cost);
    }
    std::vector<std::pair<double, double>> windows{{lo, hi}};
    if (lo <= 10.0 && hi >= 100.0 && cfg.variant != Variant::Ratios)
        windows.emplace_back(10.0, 100.0);
    {
        std::ofstream f(out_dir + "/summary.md");
        f << summary_markdown(out.rows, windows);
    }
    if (!out.ga_log_lines.empty()) {
        std::ofstream f(out_dir + "/ga_log.csv");
        f << "dataset,split,cost,generation,best_fitness,mean_fitness\n";
        for (const auto& line : out.ga_log_lines) f << line << '\n';
    }

    const std::string x_label = cfg.variant == Variant::Ratios
                                    ? "negative / positive error cost"
                                    : "misclassification error cost (dollars)";

    auto norm = collect_means(out.rows, &ResultRow::normalized_cost_pct);
    auto expend = collect_means(out.rows, &ResultRow::test_expenditure_pct);
    auto err = collect_means(out.rows, &ResultRow::error_rate_pct);

    std::set<std::string> datasets;
    for (const auto& r : out.rows) datasets.insert(r.dataset);

    // normalized-cost panels, one per dataset plus the equal-weight average
    auto cost_panel = [&](const std::string& title,
                          const std::map<std::string, std::map<double, double>>& by_algo) {
        PlotSpec spec;
        spec.title = title;
        spec.x_label = x_label;
        spec.y_label = "average cost (% of standard)";
        spec.log_x = true;
        for (const auto& [algo, pts] : by_algo) {
            PlotSeries s;
            s.label = algo;
            for (auto [x, y] : pts) s.points.emplace_back(x, y);
            spec.series.push_back(std::move(s));
        }
        return render_line_plot(spec);
    };

    std::map<std::string, std::map<double, std::pair<double, int>>> avg_acc;
    for (const auto& ds : datasets) {
        std::ofstream f(out_dir + "/normalized_cost_" + ds + ".svg");
        f << cost_panel(ds, norm[ds]);
        for (const auto& [algo, pts] : norm[ds])
            for (auto [x, y] : pts) {
                avg_acc[algo][x].first += y;
                avg_acc[algo][x].second += 1;
            }
    }
    std::map<std::string, std::map<double, double>> avg;
    for (auto& [algo, pts] : avg_acc)
        for (auto& [x, cell] : pts) avg[algo][x] = cell.first / cell.second;
    {
        std::ofstream f(out_dir + "/normalized_cost_average.svg");
        f << cost_panel("Average of " + std::to_string(datasets.size()) + " datasets", avg);
    }

    // ICET test-expenditure / error-rate panels
    const std::string icet_name = algorithm_name(Algorithm::ICET);
    bool has_icet = false;
    for (const auto& r : out.rows) has_icet |= (r.algorithm == icet_name);
    if (has_icet) {
        auto tradeoff_panel = [&](const std::string& title,
                                  const std::map<double, double>& exp_pts,
                                  const std::map<double, double>& err_pts) {
            PlotSpec spec;
            spec.title = title;
            spec.x_label = x_label;
            spec.y_label = "percent";
            spec.log_x = true;
            PlotSeries se;
            se.label = "test expenditure (% of T)";
            for (auto [x, y] : exp_pts) se.points.emplace_back(x, y);
            PlotSeries sr;
            sr.label = "error rate (%)";
            for (auto [x, y] : err_pts) sr.points.emplace_back(x, y);
            spec.series.push_back(std::move(se));
            spec.series.push_back(std::move(sr));
            return render_line_plot(spec);
        };

        std::map<double, std::pair<double, int>> aexp, aerr;
        for (const auto& ds : datasets) {
            std::ofstream f(out_dir + "/icet_tradeoff_" + ds + ".svg");
            f << tradeoff_panel("ICET: " + ds, expend[ds][icet_name], err[ds][icet_name]);
            for (auto [x, y] : expend[ds][icet_name]) {
                aexp[x].first += y;
                aexp[x].second += 1;
            }
            for (auto [x, y] : err[ds][icet_name]) {
                aerr[x].first += y;
                aerr[x].second += 1;
            }
        }
        std::map<double, double> mexp, merr;
        for (auto& [x, cell] : aexp) mexp[x] = cell.first / cell.second;
        for (auto& [x, cell] : aerr) merr[x] = cell.first / cell.second;
        std::ofstream f(out_dir + "/icet_tradeoff_average.svg");
        f << tradeoff_panel("ICET: average of " + std::to_string(datasets.size()) + " datasets",
                            mexp, merr);
    }
}

} // namespace icet
