#include "icet/cost_eval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace icet {

Money CostLedger::test_total() const {
    Money t;
    for (const auto& c : tests_charged) t += c.price;
    return t;
}

Money price_of_test(int attr, const std::vector<bool>& already_selected,
                    const std::vector<const TestCostEntry*>& schema_by_attr) {
    const TestCostEntry* e = schema_by_attr[attr];
    if (!e)
        throw std::runtime_error("attribute #" + std::to_string(attr) + " has no schema entry");
    if (e->grouped()) {
        for (std::size_t a = 0; a < schema_by_attr.size(); ++a) {
            if (static_cast<int>(a) == attr || !already_selected[a]) continue;
            const TestCostEntry* o = schema_by_attr[a];
            if (o && o->group == e->group) return e->subsequent_cost();
        }
    }
    return e->cost;
}

namespace {

// One entry per path node: either a fresh charge (possibly a subtree
// commitment covering several tests) or a reference to the step that
// already paid.
struct WalkStep {
    const TreeNode* node;
    bool already_paid = false;
    int paid_in_step = 0; // 1-based
    bool commitment = false;
    std::vector<ChargedTest> charges;
};

struct Walk {
    std::vector<WalkStep> steps;
    int guess = -1;
};

void charge_subtree(const TreeNode& node, std::vector<bool>& charged,
                    std::vector<int>& paid_step, int step,
                    const std::vector<const TestCostEntry*>& schema_by_attr,
                    std::vector<ChargedTest>& out) {
    if (node.is_leaf()) return;
    if (!charged[node.attribute]) {
        Money price = price_of_test(node.attribute, charged, schema_by_attr);
        charged[node.attribute] = true;
        paid_step[node.attribute] = step;
        out.push_back({node.attribute, price});
    }
    for (const auto& c : node.children)
        charge_subtree(c, charged, paid_step, step, schema_by_attr, out);
}

Walk walk_case(const DecisionTree& tree, std::span<const double> values,
               const std::vector<const TestCostEntry*>& schema_by_attr) {
    Walk w;
    auto cls = classify(tree, values);
    w.guess = cls.label;

    std::vector<bool> charged(schema_by_attr.size(), false);
    std::vector<int> paid_step(schema_by_attr.size(), 0);
    int step = 0;
    for (const TreeNode* node : cls.path) {
        ++step;
        WalkStep ws;
        ws.node = node;
        const int attr = node->attribute;
        if (charged[attr]) {
            ws.already_paid = true;
            ws.paid_in_step = paid_step[attr];
        } else {
            const TestCostEntry* e = schema_by_attr[attr];
            if (!e)
                throw std::runtime_error("attribute #" + std::to_string(attr) +
                                         " on path has no schema entry");
            if (e->delayed) {
                // commit to every test we might need from here on
                ws.commitment = true;
                charge_subtree(*node, charged, paid_step, step, schema_by_attr, ws.charges);
            } else {
                Money price = price_of_test(attr, charged, schema_by_attr);
                charged[attr] = true;
                paid_step[attr] = step;
                ws.charges.push_back({attr, price});
            }
        }
        w.steps.push_back(std::move(ws));
    }
    return w;
}

} // namespace

CostLedger case_cost(const DecisionTree& tree, std::span<const double> values, int actual_class,
                     const std::vector<const TestCostEntry*>& schema_by_attr,
                     const ClassificationCostMatrix& matrix) {
    Walk w = walk_case(tree, values, schema_by_attr);
    CostLedger ledger;
    for (const auto& s : w.steps)
        for (const auto& c : s.charges) ledger.tests_charged.push_back(c);
    ledger.error_cost = matrix.at(w.guess, actual_class);
    ledger.total = ledger.test_total() + ledger.error_cost;
    return ledger;
}

EvaluationReport average_cost(const DecisionTree& tree, const Dataset& testset,
                              const TestCostSchema& schema,
                              const ClassificationCostMatrix& matrix, const EvalContext& ctx) {
    if (testset.n_cases() == 0) throw std::runtime_error("average_cost: empty testing set");
    auto aligned = schema.aligned_to(testset);

    Money total, test_total;
    int errors = 0;
    for (int c = 0; c < testset.n_cases(); ++c) {
        auto values = testset.case_values(c);
        CostLedger ledger = case_cost(tree, values, testset.label(c), aligned, matrix);
        total += ledger.total;
        test_total += ledger.test_total();
        if (ledger.error_cost != Money()) ++errors;
    }
    const double n = testset.n_cases();

    EvaluationReport r;
    r.average_cost = total.dollars() / n;
    r.normalized_cost_pct = ctx.standard_cost > 0.0 ? 100.0 * r.average_cost / ctx.standard_cost
                                                    : 0.0;
    r.test_expenditure_pct = ctx.max_test_cost.cents() > 0
                                 ? 100.0 * (test_total.dollars() / n) / ctx.max_test_cost.dollars()
                                 : 0.0;
    r.error_rate_pct = 100.0 * errors / n;
    return r;
}

double mean_case_cost(const DecisionTree& tree, const Dataset& testset,
                      const TestCostSchema& schema, const ClassificationCostMatrix& matrix) {
    if (testset.n_cases() == 0) throw std::runtime_error("mean_case_cost: empty testing set");
    auto aligned = schema.aligned_to(testset);
    Money total;
    for (int c = 0; c < testset.n_cases(); ++c) {
        auto values = testset.case_values(c);
        total += case_cost(tree, values, testset.label(c), aligned, matrix).total;
    }
    return total.dollars() / testset.n_cases();
}

Money total_test_cost(const TestCostSchema& schema) {
    Money t;
    std::vector<std::string> groups_seen;
    for (const auto& e : schema.entries()) {
        if (!e.usable) continue;
        if (!e.grouped()) {
            t += e.cost;
            continue;
        }
        t += e.subsequent_cost();
        if (std::find(groups_seen.begin(), groups_seen.end(), e.group) == groups_seen.end()) {
            groups_seen.push_back(e.group);
            t += e.group_common;
        }
    }
    return t;
}

double standard_cost(const Dataset& dataset, const TestCostSchema& schema,
                     const ClassificationCostMatrix& matrix) {
    auto f = class_frequencies(dataset);
    double min_term = 1.0;
    for (double fi : f) min_term = std::min(min_term, 1.0 - fi);
    return total_test_cost(schema).dollars() + min_term * matrix.max_entry().dollars();
}

Money max_cost(const TestCostSchema& schema, const ClassificationCostMatrix& matrix) {
    return total_test_cost(schema) + matrix.max_entry();
}

namespace {

std::string value_str(const Dataset& d, int attr, double v) {
    const auto& meta = d.attribute(attr);
    if (!meta.continuous) return meta.values[static_cast<int>(v)];
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

CaseTrace trace_case(const DecisionTree& tree, std::span<const double> values, int actual_class,
                     const Dataset& d, const std::vector<const TestCostEntry*>& schema_by_attr,
                     const ClassificationCostMatrix& matrix) {
    Walk w = walk_case(tree, values, schema_by_attr);

    CaseTrace trace;
    Money total;
    for (const auto& s : w.steps) {
        TraceStep t;
        const int attr = s.node->attribute;
        t.action = "do " + d.attribute(attr).name;
        t.result = d.attribute(attr).name + " = " + value_str(d, attr, values[attr]);
        if (s.already_paid) {
            t.cost = "already paid, in step #" + std::to_string(s.paid_in_step);
        } else if (s.commitment && s.charges.size() > 1) {
            Money sum;
            std::ostringstream os;
            for (std::size_t i = 0; i < s.charges.size(); ++i) {
                if (i) os << " + ";
                os << s.charges[i].price.str();
                sum += s.charges[i].price;
            }
            os << " = " << sum.str();
            t.cost = os.str();
            total += sum;
        } else {
            Money sum;
            for (const auto& c : s.charges) sum += c.price;
            t.cost = sum.str();
            total += sum;
        }
        trace.steps.push_back(std::move(t));
    }

    TraceStep guess;
    guess.action = "guess class = " + d.classes()[w.guess];
    guess.result = "actual class = " + d.classes()[actual_class];
    Money penalty = matrix.at(w.guess, actual_class);
    guess.cost = penalty.str();
    total += penalty;
    trace.steps.push_back(std::move(guess));
    trace.total = total;
    return trace;
}

std::string CaseTrace::str() const {
    std::ostringstream os;
    int step = 0;
    for (const auto& s : steps)
        os << ++step << "\t" << s.action << "\t" << s.result << "\t" << s.cost << "\n";
    os << "\ttotal cost\t\t" << total.str() << "\n";
    return os.str();
}

} // namespace icet
