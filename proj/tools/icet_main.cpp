#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "icet/experiment.hpp"

namespace {

struct BundledEntry {
    const char* name;
    const char* data_file;
};

// Raw files are the published UCI ones; data/README.md lists the URLs.
constexpr BundledEntry kBundled[] = {
    {"bupa", "bupa.data"},
    {"heart", "processed.cleveland.data"},
    {"hepatitis", "hepatitis.data"},
    {"pima", "pima-indians-diabetes.data"},
    {"thyroid", "ann-train.data"},
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

icet::BenchmarkPaths resolve_dataset(const std::string& token, const std::string& bundle_dir,
                                     const std::string& data_dir) {
    // custom datasets come as name:descriptor:schema:datafile
    if (token.find(':') != std::string::npos) {
        auto parts = split_csv(token);
        std::vector<std::string> f;
        std::stringstream ss(token);
        std::string item;
        while (std::getline(ss, item, ':')) f.push_back(item);
        if (f.size() != 4)
            throw CLI::ValidationError("--datasets",
                                       "custom dataset must be name:descriptor:schema:datafile");
        return {f[0], f[1], f[2], f[3]};
    }
    for (const auto& e : kBundled) {
        if (token == e.name)
            return {token, bundle_dir + "/" + token + ".desc", bundle_dir + "/" + token + ".schema",
                    data_dir + "/" + e.data_file};
    }
    throw CLI::ValidationError("--datasets", "unknown dataset '" + token + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost-sensitive decision-tree benchmarks (ICET, EG2, CS-ID3, IDX, C4.5)"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "Run an experiment and write rows/summary/plots");
    std::string datasets = "bupa,heart,hepatitis,pima,thyroid";
    std::string algorithms = "icet,eg2,csid3,idx,c45";
    std::string error_costs = "10,50,100,500,1000,5000,10000";
    std::string variant = "baseline";
    std::string scale = "full";
    std::string bundle_dir = "data";
    std::string data_dir = "data/uci";
    std::string out_dir = "out";
    int splits = 10;
    std::uint64_t seed = 123456789;
    int workers = 1;
    double mutation_rate = 0.10;
    run->add_option("--datasets", datasets,
                    "comma list of bundled names, or name:descriptor:schema:datafile");
    run->add_option("--algorithms", algorithms, "comma list of icet,eg2,csid3,idx,c45");
    run->add_option("--error-costs", error_costs, "comma list of k values in dollars");
    run->add_option("--splits", splits, "number of train/test splits");
    run->add_option("--seed", seed, "master seed for splits and the genetic search");
    run->add_option("--variant", variant,
                    "baseline|no-delay|no-discount|ratios|mismatch|seeded|binary|mutation-only");
    run->add_option("--scale", scale, "full (paper protocol) or desk (splits=3, trials=200, pop=20)");
    run->add_option("--mutation-rate", mutation_rate, "mutation rate for the mutation-only variant");
    run->add_option("--bundle-dir", bundle_dir, "directory with .desc/.schema files");
    run->add_option("--data-dir", data_dir, "directory with the raw UCI data files");
    run->add_option("--workers", workers, "parallel cells (0 = hardware threads)");
    run->add_option("--out", out_dir, "output directory");

    // ---- summarize ----
    auto* summ = app.add_subcommand("summarize", "Recompute summary tables from a rows.csv");
    std::string rows_path = "out/rows.csv";
    std::string window = "";
    summ->add_option("--rows", rows_path, "rows.csv produced by run");
    summ->add_option("--window", window, "cost window lo:hi (default: full range and 10:100)");

    // ---- plot ----
    auto* plot = app.add_subcommand("plot", "Regenerate plots (and derived files) from a rows.csv");
    std::string plot_rows = "out/rows.csv";
    std::string plot_out = "out";
    std::string plot_variant = "baseline";
    plot->add_option("--rows", plot_rows, "rows.csv produced by run");
    plot->add_option("--out", plot_out, "output directory");
    plot->add_option("--variant", plot_variant, "variant the rows came from (axis labelling)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            icet::ExperimentConfig cfg;
            for (const auto& tok : split_csv(datasets))
                cfg.datasets.push_back(resolve_dataset(tok, bundle_dir, data_dir));
            cfg.algorithms.clear();
            for (const auto& tok : split_csv(algorithms)) {
                auto a = icet::algorithm_from_name(tok);
                if (!a) throw std::runtime_error("unknown algorithm '" + tok + "'");
                cfg.algorithms.push_back(*a);
            }
            cfg.error_costs.clear();
            for (const auto& tok : split_csv(error_costs))
                cfg.error_costs.push_back(icet::Money::parse(tok));
            cfg.splits = splits;
            cfg.seed = seed;
            auto v = icet::variant_from_name(variant);
            if (!v) throw std::runtime_error("unknown variant '" + variant + "'");
            cfg.variant = *v;
            cfg.mutation_only_rate = mutation_rate;
            if (scale == "desk") cfg.desk_scale = true;
            else if (scale != "full") throw std::runtime_error("scale must be full or desk");
            cfg.workers = workers == 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                       : workers;

            std::cerr << "[run] " << cfg.datasets.size() << " dataset(s), "
                      << cfg.algorithms.size() << " algorithm(s), " << cfg.effective_splits()
                      << " split(s), variant " << icet::variant_name(cfg.variant) << "\n";
            auto out = icet::run_experiment(cfg);
            icet::emit_outputs(out, cfg, out_dir);
            std::cerr << "[run] wrote " << out.rows.size() << " rows under " << out_dir << "\n";

            double lo = out.rows.front().cost, hi = lo;
            for (const auto& r : out.rows) {
                lo = std::min(lo, r.cost);
                hi = std::max(hi, r.cost);
            }
            std::vector<std::pair<double, double>> windows{{lo, hi}};
            if (lo <= 10 && hi >= 100 && cfg.variant != icet::Variant::Ratios)
                windows.emplace_back(10, 100);
            std::cout << icet::summary_markdown(out.rows, windows);
        } else if (summ->parsed()) {
            auto rows = icet::read_rows(rows_path);
            std::vector<std::pair<double, double>> windows;
            if (!window.empty()) {
                auto pos = window.find(':');
                if (pos == std::string::npos)
                    throw std::runtime_error("--window must be lo:hi");
                windows.emplace_back(std::stod(window.substr(0, pos)),
                                     std::stod(window.substr(pos + 1)));
            } else {
                double lo = rows.front().cost, hi = lo;
                for (const auto& r : rows) {
                    lo = std::min(lo, r.cost);
                    hi = std::max(hi, r.cost);
                }
                windows.emplace_back(lo, hi);
                if (lo <= 10 && hi >= 100) windows.emplace_back(10, 100);
            }
            std::cout << icet::summary_markdown(rows, windows);
        } else if (plot->parsed()) {
            icet::ExperimentOutput out;
            out.rows = icet::read_rows(plot_rows);
            icet::ExperimentConfig cfg;
            auto v = icet::variant_from_name(plot_variant);
            if (!v) throw std::runtime_error("unknown variant '" + plot_variant + "'");
            cfg.variant = *v;
            icet::emit_outputs(out, cfg, plot_out);
            std::cerr << "[plot] wrote plots under " << plot_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
