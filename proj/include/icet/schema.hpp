#pragma once

#include <map>
#include <string>
#include <vector>

#include "icet/dataset.hpp"
#include "icet/money.hpp"

namespace icet {

struct TestCostEntry {
    std::string name;
    Money cost;         // price when no group member has been bought yet
    std::string group;  // empty = ungrouped
    Money group_common; // shared setup cost, charged once per group
    bool delayed = false;
    bool usable = true;

    bool grouped() const { return !group.empty(); }
    Money subsequent_cost() const { return grouped() ? cost - group_common : cost; }
};

// Per-attribute test prices plus the class polarity table that
// parameterizes the misclassification cost matrix.
class TestCostSchema {
public:
    static TestCostSchema load(const std::string& path);

    void add_test(TestCostEntry entry);
    void set_class_polarity(const std::string& label, bool positive);

    const TestCostEntry* entry_for(const std::string& name) const;
    const std::vector<TestCostEntry>& entries() const { return entries_; }
    bool has_polarity(const std::string& label) const;
    bool is_positive_class(const std::string& label) const;

    // Resolves schema entries against a dataset's attribute list; result[i]
    // is the entry for attribute i. Missing entries stay null and only
    // trigger an error when the evaluator actually needs them.
    std::vector<const TestCostEntry*> aligned_to(const Dataset& d) const;

    // Groups dissolved: every test at its first price, unconditional.
    TestCostSchema without_group_discounts() const;
    // Every test immediate.
    TestCostSchema all_immediate() const;

    // Throws on negative costs, inconsistent group commons, subsequent < 0.
    void validate() const;

private:
    std::vector<TestCostEntry> entries_;
    std::map<std::string, std::size_t> by_name_;
    std::map<std::string, bool> positive_class_;
};

// guess-vs-actual penalty table.
class ClassificationCostMatrix {
public:
    ClassificationCostMatrix() = default;
    ClassificationCostMatrix(std::vector<std::string> classes, std::vector<Money> entries);

    Money at(int guess, int actual) const { return entries_[guess * n_classes() + actual]; }
    int n_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::string>& classes() const { return classes_; }
    Money max_entry() const;

private:
    std::vector<std::string> classes_;
    std::vector<Money> entries_; // [guess * c + actual]
};

// Instantiates the matrix from the two error prices and the schema's class
// polarities: correct guesses cost nothing, a sick case called healthy
// costs `negative_error`, a healthy case called sick costs `positive_error`,
// and confusions within one polarity cost min(negative, positive).
ClassificationCostMatrix make_cost_matrix(const TestCostSchema& schema,
                                          const std::vector<std::string>& classes,
                                          Money positive_error, Money negative_error);

// Constant off-diagonal k, zero diagonal.
ClassificationCostMatrix make_simple_matrix(const std::vector<std::string>& classes, Money k);

} // namespace icet
