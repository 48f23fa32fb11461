#pragma once

#include <span>
#include <string>
#include <vector>

#include "icet/dataset.hpp"

namespace icet {

struct TreeNode {
    // attribute < 0 marks a leaf
    int attribute = -1;
    bool threshold_split = false;
    double threshold = 0.0;         // value <= threshold goes to children[0]
    std::vector<int> branch_values; // discrete: declared-value index per child
    std::vector<TreeNode> children;

    int leaf_class = -1; // guess at leaves, majority elsewhere
    int n_cases = 0;
    std::vector<int> class_counts;

    bool is_leaf() const { return attribute < 0; }
    int node_count() const;
    int training_errors() const { return n_cases - (class_counts.empty() ? 0 : max_count()); }
    int max_count() const;

    // structural equality: split shape and leaf classes, not training counts
    bool same_structure(const TreeNode& o) const;
};

struct DecisionTree {
    TreeNode root;
    int n_classes = 0;

    int node_count() const { return root.node_count(); }
    bool same_structure(const DecisionTree& o) const { return root.same_structure(o.root); }
};

struct ClassifyResult {
    int label = -1;
    std::vector<const TreeNode*> path; // internal (test) nodes visited, root first
};

// Deterministic walk; a discrete value with no matching branch descends to
// the child with the largest training support.
ClassifyResult classify(const DecisionTree& tree, std::span<const double> values);

// Indented node-per-line rendering with attribute/class names.
std::string to_text(const DecisionTree& tree, const Dataset& d);

// Structural machine-readable form; round-trips through tree_from_json.
std::string to_json(const DecisionTree& tree);
DecisionTree tree_from_json(const std::string& text);

} // namespace icet
