#include "icet/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace icet {

int TreeNode::node_count() const {
    int n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
}

int TreeNode::max_count() const {
    int best = 0;
    for (int c : class_counts) best = std::max(best, c);
    return best;
}

bool TreeNode::same_structure(const TreeNode& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return leaf_class == o.leaf_class;
    if (attribute != o.attribute || threshold_split != o.threshold_split) return false;
    if (threshold_split && threshold != o.threshold) return false;
    if (branch_values != o.branch_values) return false;
    if (children.size() != o.children.size()) return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i].same_structure(o.children[i])) return false;
    return true;
}

ClassifyResult classify(const DecisionTree& tree, std::span<const double> values) {
    ClassifyResult r;
    const TreeNode* node = &tree.root;
    while (!node->is_leaf()) {
        r.path.push_back(node);
        double v = values[node->attribute];
        const TreeNode* next = nullptr;
        if (node->threshold_split) {
            next = (v <= node->threshold) ? &node->children[0] : &node->children[1];
        } else {
            for (std::size_t i = 0; i < node->branch_values.size(); ++i) {
                if (node->branch_values[i] == static_cast<int>(v)) {
                    next = &node->children[i];
                    break;
                }
            }
            if (!next) {
                // unseen category: fall back to the best-supported branch
                const TreeNode* best = &node->children[0];
                for (const auto& c : node->children)
                    if (c.n_cases > best->n_cases) best = &c;
                next = best;
            }
        }
        node = next;
    }
    r.label = node->leaf_class;
    return r;
}

namespace {

void render(const TreeNode& n, const Dataset& d, int depth, std::string branch,
            std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    if (!branch.empty()) out << branch << " -> ";
    if (n.is_leaf()) {
        out << "class " << d.classes()[n.leaf_class] << " (" << n.n_cases << ")\n";
        return;
    }
    const auto& attr = d.attribute(n.attribute);
    out << attr.name << "\n";
    if (n.threshold_split) {
        std::ostringstream lo, hi;
        lo << "<= " << n.threshold;
        hi << "> " << n.threshold;
        render(n.children[0], d, depth + 1, lo.str(), out);
        render(n.children[1], d, depth + 1, hi.str(), out);
    } else {
        for (std::size_t i = 0; i < n.children.size(); ++i)
            render(n.children[i], d, depth + 1, "= " + attr.values[n.branch_values[i]], out);
    }
}

nlohmann::json node_to_json(const TreeNode& n) {
    nlohmann::json j;
    j["n"] = n.n_cases;
    j["counts"] = n.class_counts;
    if (n.is_leaf()) {
        j["class"] = n.leaf_class;
        return j;
    }
    j["attribute"] = n.attribute;
    j["majority"] = n.leaf_class;
    if (n.threshold_split) j["threshold"] = n.threshold;
    else j["values"] = n.branch_values;
    auto& kids = j["children"] = nlohmann::json::array();
    for (const auto& c : n.children) kids.push_back(node_to_json(c));
    return j;
}

TreeNode node_from_json(const nlohmann::json& j) {
    TreeNode n;
    n.n_cases = j.at("n").get<int>();
    n.class_counts = j.at("counts").get<std::vector<int>>();
    if (j.contains("class")) {
        n.leaf_class = j.at("class").get<int>();
        return n;
    }
    n.attribute = j.at("attribute").get<int>();
    n.leaf_class = j.at("majority").get<int>();
    if (j.contains("threshold")) {
        n.threshold_split = true;
        n.threshold = j.at("threshold").get<double>();
    } else {
        n.branch_values = j.at("values").get<std::vector<int>>();
    }
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    if (n.children.size() < 2) throw std::runtime_error("tree json: internal node needs children");
    return n;
}

} // namespace

std::string to_text(const DecisionTree& tree, const Dataset& d) {
    std::ostringstream out;
    render(tree.root, d, 0, "", out);
    return out.str();
}

std::string to_json(const DecisionTree& tree) {
    nlohmann::json j;
    j["n_classes"] = tree.n_classes;
    j["root"] = node_to_json(tree.root);
    return j.dump(2);
}

DecisionTree tree_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DecisionTree t;
    t.n_classes = j.at("n_classes").get<int>();
    t.root = node_from_json(j.at("root"));
    return t;
}

} // namespace icet
