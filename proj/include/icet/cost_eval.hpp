#pragma once

#include <string>
#include <vector>

#include "icet/dataset.hpp"
#include "icet/money.hpp"
#include "icet/schema.hpp"
#include "icet/tree.hpp"

namespace icet {

struct ChargedTest {
    int attribute;
    Money price;
};

struct CostLedger {
    std::vector<ChargedTest> tests_charged; // each attribute at most once, charge order
    Money error_cost;
    Money total;

    Money test_total() const;
};

// Price of doing `attr` now: the discounted price when some member of its
// group has already been selected, the first price otherwise.
Money price_of_test(int attr, const std::vector<bool>& already_selected,
                    const std::vector<const TestCostEntry*>& schema_by_attr);

// Root-to-leaf cost of one case: immediate tests are charged as they are
// met; the first delayed test commits payment for every test in its
// subtree (pre-order, group pricing applied in that order); finally the
// matrix penalty for (guess, actual). Throws if a path attribute has no
// schema entry.
CostLedger case_cost(const DecisionTree& tree, std::span<const double> values, int actual_class,
                     const std::vector<const TestCostEntry*>& schema_by_attr,
                     const ClassificationCostMatrix& matrix);

struct EvaluationReport {
    double average_cost = 0.0; // dollars per case
    double normalized_cost_pct = 0.0;
    double test_expenditure_pct = 0.0;
    double error_rate_pct = 0.0;
};

// Normalization context: the standard cost divides average cost, the
// maximum test expenditure T divides the test component.
struct EvalContext {
    double standard_cost = 0.0; // dollars
    Money max_test_cost;        // T
};

EvaluationReport average_cost(const DecisionTree& tree, const Dataset& testset,
                              const TestCostSchema& schema,
                              const ClassificationCostMatrix& matrix, const EvalContext& ctx);

// Mean total cost per case in dollars; the GA's fitness measure.
double mean_case_cost(const DecisionTree& tree, const Dataset& testset,
                      const TestCostSchema& schema, const ClassificationCostMatrix& matrix);

// T: every usable test done once, group discounts applied (each group's
// common cost paid a single time).
Money total_test_cost(const TestCostSchema& schema);

// T + min_i(1 - f_i) * max_{i,j} C_{i,j}, f over the whole dataset.
double standard_cost(const Dataset& dataset, const TestCostSchema& schema,
                     const ClassificationCostMatrix& matrix);

// T + max_{i,j} C_{i,j}.
Money max_cost(const TestCostSchema& schema, const ClassificationCostMatrix& matrix);

// Table-3-shaped trace of one case for golden tests and debugging.
struct TraceStep {
    std::string action;
    std::string result;
    std::string cost;
};

struct CaseTrace {
    std::vector<TraceStep> steps;
    Money total;

    std::string str() const;
};

CaseTrace trace_case(const DecisionTree& tree, std::span<const double> values, int actual_class,
                     const Dataset& d, const std::vector<const TestCostEntry*>& schema_by_attr,
                     const ClassificationCostMatrix& matrix);

} // namespace icet
