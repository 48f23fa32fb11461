#include "icet/induction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icet {

double entropy_bits(const std::vector<int>& counts, int total) {
    if (total <= 0) return 0.0;
    double h = 0.0;
    for (int c : counts) {
        if (c <= 0) continue;
        double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

double icf_score(double gain, double cost, double omega) {
    if (cost < 0.0) throw std::invalid_argument("icf_score: negative cost");
    if (omega < 0.0 || omega > 1.0) throw std::invalid_argument("icf_score: omega outside [0,1]");
    return (std::exp2(gain) - 1.0) / std::pow(cost + 1.0, omega);
}

double cs_id3_score(double gain, double cost) {
    if (cost <= 0.0) throw std::invalid_argument("cs_id3_score: cost must be positive");
    return gain * gain / cost;
}

double idx_score(double gain, double cost) {
    if (cost <= 0.0) throw std::invalid_argument("idx_score: cost must be positive");
    return gain / cost;
}

namespace {

struct NodeCounts {
    std::vector<int> counts;
    int total = 0;

    NodeCounts(const Dataset& d, const std::vector<int>& rows) : counts(d.n_classes(), 0) {
        for (int r : rows) ++counts[d.label(r)];
        total = static_cast<int>(rows.size());
    }
};

struct AttrSplit {
    bool valid = false;
    bool threshold_split = false;
    double threshold = 0.0;
    double gain = 0.0;
    double split_info = 0.0;
};

AttrSplit best_threshold_split(const Dataset& d, const std::vector<int>& rows, int attr,
                               int min_cases) {
    AttrSplit best;
    best.threshold_split = true;

    std::vector<std::pair<double, int>> vl;
    vl.reserve(rows.size());
    for (int r : rows) vl.emplace_back(d.value(r, attr), d.label(r));
    std::sort(vl.begin(), vl.end());

    const int m = static_cast<int>(vl.size());
    std::vector<int> total(d.n_classes(), 0), left(d.n_classes(), 0);
    for (const auto& [v, label] : vl) ++total[label];
    const double h_total = entropy_bits(total, m);

    std::vector<int> right = total;
    for (int i = 0; i + 1 < m; ++i) {
        ++left[vl[i].second];
        --right[vl[i].second];
        if (vl[i].first == vl[i + 1].first) continue;
        const int nl = i + 1, nr = m - nl;
        if (nl < min_cases || nr < min_cases) continue;
        double gain = h_total - (static_cast<double>(nl) / m) * entropy_bits(left, nl) -
                      (static_cast<double>(nr) / m) * entropy_bits(right, nr);
        if (!best.valid || gain > best.gain) {
            double t = (vl[i].first + vl[i + 1].first) / 2.0;
            if (!(t < vl[i + 1].first)) t = vl[i].first; // adjacent representable values
            double pl = static_cast<double>(nl) / m, pr = static_cast<double>(nr) / m;
            best.valid = true;
            best.gain = gain;
            best.threshold = t;
            best.split_info = -pl * std::log2(pl) - pr * std::log2(pr);
        }
    }
    return best;
}

AttrSplit best_discrete_split(const Dataset& d, const std::vector<int>& rows, int attr,
                              int min_cases) {
    AttrSplit best;
    const int nv = static_cast<int>(d.attribute(attr).values.size());
    const int nc = d.n_classes();
    std::vector<int> branch_n(nv, 0);
    std::vector<std::vector<int>> branch_counts(nv, std::vector<int>(nc, 0));
    std::vector<int> total(nc, 0);
    for (int r : rows) {
        int v = static_cast<int>(d.value(r, attr));
        ++branch_n[v];
        ++branch_counts[v][d.label(r)];
        ++total[d.label(r)];
    }
    const int m = static_cast<int>(rows.size());

    int present = 0, supported = 0;
    for (int v = 0; v < nv; ++v) {
        if (branch_n[v] > 0) ++present;
        if (branch_n[v] >= min_cases) ++supported;
    }
    if (present < 2 || supported < 2) return best;

    double h = entropy_bits(total, m), info = 0.0, split_info = 0.0;
    for (int v = 0; v < nv; ++v) {
        if (branch_n[v] == 0) continue;
        double p = static_cast<double>(branch_n[v]) / m;
        info += p * entropy_bits(branch_counts[v], branch_n[v]);
        split_info -= p * std::log2(p);
    }
    best.valid = true;
    best.gain = h - info;
    best.split_info = split_info;
    return best;
}

AttrSplit best_split(const Dataset& d, const std::vector<int>& rows, int attr, int min_cases) {
    return d.attribute(attr).continuous ? best_threshold_split(d, rows, attr, min_cases)
                                        : best_discrete_split(d, rows, attr, min_cases);
}

} // namespace

double info_gain_threshold(const Dataset& d, const std::vector<int>& rows, int attr,
                           double threshold) {
    NodeCounts nc(d, rows);
    std::vector<int> left(d.n_classes(), 0), right(d.n_classes(), 0);
    int nl = 0, nr = 0;
    for (int r : rows) {
        if (d.value(r, attr) <= threshold) { ++left[d.label(r)]; ++nl; }
        else { ++right[d.label(r)]; ++nr; }
    }
    double h = entropy_bits(nc.counts, nc.total);
    if (nl == 0 || nr == 0) return 0.0;
    return h - (static_cast<double>(nl) / nc.total) * entropy_bits(left, nl) -
           (static_cast<double>(nr) / nc.total) * entropy_bits(right, nr);
}

double info_gain_discrete(const Dataset& d, const std::vector<int>& rows, int attr) {
    NodeCounts nc(d, rows);
    const int nv = static_cast<int>(d.attribute(attr).values.size());
    std::vector<int> branch_n(nv, 0);
    std::vector<std::vector<int>> branch_counts(nv, std::vector<int>(d.n_classes(), 0));
    for (int r : rows) {
        int v = static_cast<int>(d.value(r, attr));
        ++branch_n[v];
        ++branch_counts[v][d.label(r)];
    }
    double info = 0.0;
    for (int v = 0; v < nv; ++v) {
        if (branch_n[v] == 0) continue;
        double p = static_cast<double>(branch_n[v]) / nc.total;
        info += p * entropy_bits(branch_counts[v], branch_n[v]);
    }
    return entropy_bits(nc.counts, nc.total) - info;
}

SplitChoice select_attribute(const Dataset& d, const std::vector<int>& rows,
                             const std::vector<bool>& candidates,
                             const SelectionHeuristic& heuristic, int min_cases_per_leaf,
                             bool gain_ratio_guard) {
    struct Scored {
        int attr;
        AttrSplit split;
        double ratio;
    };
    std::vector<Scored> viable;
    for (int a = 0; a < d.n_attributes(); ++a) {
        if (!candidates[a]) continue;
        AttrSplit s = best_split(d, rows, a, min_cases_per_leaf);
        if (!s.valid || s.gain <= 0.0) continue;
        double ratio = s.split_info > 0.0 ? s.gain / s.split_info : 0.0;
        viable.push_back({a, s, ratio});
    }

    SplitChoice choice;
    if (viable.empty()) return choice;

    if (heuristic.kind == HeuristicKind::GainRatio) {
        double avg_gain = 0.0;
        for (const auto& v : viable) avg_gain += v.split.gain;
        avg_gain /= static_cast<double>(viable.size());
        for (const auto& v : viable) {
            if (gain_ratio_guard && v.split.gain < avg_gain - 1e-12) continue;
            if (choice.none() || v.ratio > choice.score) {
                choice.attribute = v.attr;
                choice.threshold_split = v.split.threshold_split;
                choice.threshold = v.split.threshold;
                choice.gain = v.split.gain;
                choice.score = v.ratio;
            }
        }
        return choice;
    }

    for (const auto& v : viable) {
        double cost = heuristic.costs.at(v.attr);
        double score = 0.0;
        switch (heuristic.kind) {
            case HeuristicKind::ICF: score = icf_score(v.split.gain, cost, heuristic.omega); break;
            case HeuristicKind::CSID3: score = cs_id3_score(v.split.gain, cost); break;
            case HeuristicKind::IDX: score = idx_score(v.split.gain, cost); break;
            default: break;
        }
        if (score <= 0.0) continue;
        if (choice.none() || score > choice.score) {
            choice.attribute = v.attr;
            choice.threshold_split = v.split.threshold_split;
            choice.threshold = v.split.threshold;
            choice.gain = v.split.gain;
            choice.score = score;
        }
    }
    return choice;
}

namespace {

void validate_params(const Dataset& d, const InductionParams& p) {
    const auto& h = p.heuristic;
    if (h.kind != HeuristicKind::GainRatio) {
        if (static_cast<int>(h.costs.size()) != d.n_attributes())
            throw std::invalid_argument("heuristic cost vector does not match attribute count");
        for (int a = 0; a < d.n_attributes(); ++a) {
            bool excluded = !p.excluded.empty() && p.excluded[a];
            if (excluded) continue;
            if (h.kind == HeuristicKind::ICF && h.costs[a] < 0.0)
                throw std::invalid_argument("ICF cost must be >= 0");
            if ((h.kind == HeuristicKind::CSID3 || h.kind == HeuristicKind::IDX) &&
                h.costs[a] <= 0.0)
                throw std::invalid_argument("CS-ID3/IDX costs must be positive");
        }
        if (h.omega < 0.0 || h.omega > 1.0)
            throw std::invalid_argument("omega outside [0,1]");
    }
    if (p.cf < 1.0 || p.cf > 100.0) throw std::invalid_argument("cf outside [1,100]");
    if (!p.excluded.empty() && static_cast<int>(p.excluded.size()) != d.n_attributes())
        throw std::invalid_argument("excluded mask does not match attribute count");
}

TreeNode grow(const Dataset& d, const std::vector<int>& rows, std::vector<bool> candidates,
              const InductionParams& p) {
    TreeNode node;
    NodeCounts nc(d, rows);
    node.n_cases = nc.total;
    node.class_counts = nc.counts;
    node.leaf_class =
        static_cast<int>(std::max_element(nc.counts.begin(), nc.counts.end()) - nc.counts.begin());

    bool pure = *std::max_element(nc.counts.begin(), nc.counts.end()) == nc.total;
    if (pure || nc.total < p.min_cases_per_leaf) return node;

    SplitChoice choice = select_attribute(d, rows, candidates, p.heuristic, p.min_cases_per_leaf,
                                          p.gain_ratio_guard);
    if (choice.none()) return node;

    node.attribute = choice.attribute;
    node.threshold_split = choice.threshold_split;
    node.threshold = choice.threshold;

    if (choice.threshold_split) {
        std::vector<int> lo, hi;
        for (int r : rows)
            (d.value(r, choice.attribute) <= choice.threshold ? lo : hi).push_back(r);
        node.children.push_back(grow(d, lo, candidates, p));
        node.children.push_back(grow(d, hi, candidates, p));
    } else {
        const int nv = static_cast<int>(d.attribute(choice.attribute).values.size());
        std::vector<std::vector<int>> by_value(nv);
        for (int r : rows) by_value[static_cast<int>(d.value(r, choice.attribute))].push_back(r);
        candidates[choice.attribute] = false; // a discrete test never repeats on a path
        for (int v = 0; v < nv; ++v) {
            if (by_value[v].empty()) continue;
            node.branch_values.push_back(v);
            node.children.push_back(grow(d, by_value[v], candidates, p));
        }
    }
    return node;
}

} // namespace

DecisionTree build_unpruned(const Dataset& train, const InductionParams& params) {
    if (train.n_cases() == 0) throw std::invalid_argument("build_tree: empty training set");
    validate_params(train, params);

    std::vector<bool> candidates(train.n_attributes(), true);
    for (std::size_t a = 0; a < params.excluded.size(); ++a)
        if (params.excluded[a]) candidates[a] = false;

    std::vector<int> rows(train.n_cases());
    for (int i = 0; i < train.n_cases(); ++i) rows[i] = i;

    DecisionTree t;
    t.n_classes = train.n_classes();
    t.root = grow(train, rows, std::move(candidates), params);
    return t;
}

DecisionTree build_tree(const Dataset& train, const InductionParams& params) {
    DecisionTree t = build_unpruned(train, params);
    if (params.prune_enabled) prune(t, params.cf);
    return t;
}

double pessimistic_error_rate(int errors, int n, double cf) {
    if (n <= 0) return 0.0;
    if (cf >= 100.0) return static_cast<double>(errors) / n;
    if (errors >= n) return 1.0;
    const double conf = cf / 100.0;

    // log C(n, i) for i = 0..errors
    std::vector<double> log_comb(errors + 1, 0.0);
    for (int i = 0; i < errors; ++i)
        log_comb[i + 1] = log_comb[i] + std::log(static_cast<double>(n - i)) -
                          std::log(static_cast<double>(i + 1));

    auto cdf = [&](double p) {
        if (p <= 0.0) return 1.0;
        if (p >= 1.0) return 0.0;
        double s = 0.0;
        double lp = std::log(p), lq = std::log1p(-p);
        for (int i = 0; i <= errors; ++i) s += std::exp(log_comb[i] + i * lp + (n - i) * lq);
        return std::min(s, 1.0);
    };

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
        double mid = (lo + hi) / 2.0;
        if (cdf(mid) > conf) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2.0;
}

namespace {

double prune_node(TreeNode& node, double cf) {
    if (node.is_leaf())
        return node.n_cases * pessimistic_error_rate(node.training_errors(), node.n_cases, cf);

    double subtree_est = 0.0;
    for (auto& c : node.children) subtree_est += prune_node(c, cf);

    double leaf_est =
        node.n_cases * pessimistic_error_rate(node.training_errors(), node.n_cases, cf);
    if (leaf_est <= subtree_est + 1e-9) {
        node.attribute = -1;
        node.threshold_split = false;
        node.threshold = 0.0;
        node.branch_values.clear();
        node.children.clear();
        return leaf_est;
    }
    return subtree_est;
}

} // namespace

void prune(DecisionTree& tree, double cf) {
    prune_node(tree.root, cf);
}

double training_accuracy(const DecisionTree& tree, const Dataset& d) {
    if (d.n_cases() == 0) return 0.0;
    int correct = 0;
    for (int c = 0; c < d.n_cases(); ++c) {
        auto values = d.case_values(c);
        if (classify(tree, values).label == d.label(c)) ++correct;
    }
    return static_cast<double>(correct) / d.n_cases();
}

} // namespace icet
