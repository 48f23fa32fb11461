#pragma once

#include <vector>

#include "icet/dataset.hpp"
#include "icet/tree.hpp"

namespace icet {

enum class HeuristicKind { GainRatio, ICF, CSID3, IDX };

struct SelectionHeuristic {
    HeuristicKind kind = HeuristicKind::GainRatio;
    std::vector<double> costs; // per-attribute, dollars; ICF/CSID3/IDX only
    double omega = 1.0;        // ICF bias strength, in [0,1]
};

struct InductionParams {
    SelectionHeuristic heuristic;
    double cf = 25.0;           // pruning confidence, 1 (heavy) .. 100 (light)
    std::vector<bool> excluded; // attributes the tree may never test
    int min_cases_per_leaf = 2;
    bool gain_ratio_guard = true; // C4.5's mean-gain filter before ratio ranking
    bool prune_enabled = true;
};

// Shannon entropy of a count vector, in bits.
double entropy_bits(const std::vector<int>& counts, int total);

// Selection scores. Gains are in bits, costs in dollars.
double icf_score(double gain, double cost, double omega); // (2^gain - 1)/(cost+1)^omega
double cs_id3_score(double gain, double cost);            // gain^2 / cost
double idx_score(double gain, double cost);               // gain / cost

// Info gain of concrete candidate splits over a row subset.
double info_gain_threshold(const Dataset& d, const std::vector<int>& rows, int attr,
                           double threshold);
double info_gain_discrete(const Dataset& d, const std::vector<int>& rows, int attr);

struct SplitChoice {
    int attribute = -1; // -1: no candidate has a positive score
    bool threshold_split = false;
    double threshold = 0.0;
    double gain = 0.0;
    double score = 0.0;

    bool none() const { return attribute < 0; }
};

// Best attribute under the heuristic; candidates[i]==false removes attribute
// i from consideration. Ties break on the lower attribute index, then the
// lower threshold.
SplitChoice select_attribute(const Dataset& d, const std::vector<int>& rows,
                             const std::vector<bool>& candidates,
                             const SelectionHeuristic& heuristic, int min_cases_per_leaf,
                             bool gain_ratio_guard);

// TDIDT growth followed by pessimistic pruning at params.cf.
DecisionTree build_tree(const Dataset& train, const InductionParams& params);
DecisionTree build_unpruned(const Dataset& train, const InductionParams& params);

// Exact binomial upper confidence limit on the error rate of a leaf with
// `errors` mistakes out of `n`, at confidence conf = cf/100. cf = 100
// degenerates to the observed rate (no added pessimism).
double pessimistic_error_rate(int errors, int n, double cf);

// Bottom-up subtree replacement; returns the pruned tree's pessimistic
// error estimate. The result is always a contraction of the input.
void prune(DecisionTree& tree, double cf);

// Fraction of rows the tree labels correctly.
double training_accuracy(const DecisionTree& tree, const Dataset& d);

} // namespace icet
