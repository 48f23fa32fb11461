#include "icet/schema.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

TestCostSchema TestCostSchema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema file: " + path);

    TestCostSchema s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);

        if (toks[0] == "test") {
            if (toks.size() < 2) throw std::runtime_error(where + ": test needs a name");
            TestCostEntry e;
            e.name = toks[1];
            std::size_t i = 2;
            while (i < toks.size()) {
                if (toks[i] == "cost" && i + 1 < toks.size()) {
                    e.cost = Money::parse(toks[i + 1]);
                    i += 2;
                } else if (toks[i] == "group" && i + 1 < toks.size()) {
                    e.group = toks[i + 1];
                    i += 2;
                } else if (toks[i] == "common" && i + 1 < toks.size()) {
                    e.group_common = Money::parse(toks[i + 1]);
                    i += 2;
                } else if (toks[i] == "delayed") {
                    e.delayed = true;
                    ++i;
                } else if (toks[i] == "unusable") {
                    e.usable = false;
                    ++i;
                } else {
                    throw std::runtime_error(where + ": unexpected token '" + toks[i] + "'");
                }
            }
            if (e.grouped() && e.group_common == Money())
                throw std::runtime_error(where + ": grouped test needs a 'common' amount");
            s.add_test(std::move(e));
        } else if (toks[0] == "class") {
            if (toks.size() != 3 || (toks[2] != "positive" && toks[2] != "negative"))
                throw std::runtime_error(where + ": class <label> positive|negative");
            s.set_class_polarity(toks[1], toks[2] == "positive");
        } else {
            throw std::runtime_error(where + ": unknown directive '" + toks[0] + "'");
        }
    }
    s.validate();
    return s;
}

void TestCostSchema::add_test(TestCostEntry entry) {
    if (by_name_.count(entry.name))
        throw std::runtime_error("duplicate test entry '" + entry.name + "'");
    by_name_[entry.name] = entries_.size();
    entries_.push_back(std::move(entry));
}

void TestCostSchema::set_class_polarity(const std::string& label, bool positive) {
    positive_class_[label] = positive;
}

const TestCostEntry* TestCostSchema::entry_for(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &entries_[it->second];
}

bool TestCostSchema::has_polarity(const std::string& label) const {
    return positive_class_.count(label) != 0;
}

bool TestCostSchema::is_positive_class(const std::string& label) const {
    auto it = positive_class_.find(label);
    if (it == positive_class_.end())
        throw std::runtime_error("no polarity declared for class '" + label + "'");
    return it->second;
}

std::vector<const TestCostEntry*> TestCostSchema::aligned_to(const Dataset& d) const {
    std::vector<const TestCostEntry*> out(d.n_attributes(), nullptr);
    for (int a = 0; a < d.n_attributes(); ++a)
        out[a] = entry_for(d.attribute(a).name);
    return out;
}

TestCostSchema TestCostSchema::without_group_discounts() const {
    TestCostSchema s;
    for (TestCostEntry e : entries_) {
        e.group.clear();
        e.group_common = Money();
        s.add_test(std::move(e));
    }
    s.positive_class_ = positive_class_;
    return s;
}

TestCostSchema TestCostSchema::all_immediate() const {
    TestCostSchema s;
    for (TestCostEntry e : entries_) {
        e.delayed = false;
        s.add_test(std::move(e));
    }
    s.positive_class_ = positive_class_;
    return s;
}

void TestCostSchema::validate() const {
    std::map<std::string, Money> group_common;
    for (const auto& e : entries_) {
        if (e.cost < Money())
            throw std::runtime_error("negative cost for test '" + e.name + "'");
        if (e.grouped()) {
            if (e.group_common < Money() || e.subsequent_cost() < Money())
                throw std::runtime_error("bad group pricing for test '" + e.name + "'");
            auto [it, inserted] = group_common.emplace(e.group, e.group_common);
            if (!inserted && it->second != e.group_common)
                throw std::runtime_error("group '" + e.group +
                                         "' has inconsistent common costs");
        }
    }
}

ClassificationCostMatrix::ClassificationCostMatrix(std::vector<std::string> classes,
                                                   std::vector<Money> entries)
    : classes_(std::move(classes)), entries_(std::move(entries)) {
    if (entries_.size() != classes_.size() * classes_.size())
        throw std::runtime_error("cost matrix is not c x c");
}

Money ClassificationCostMatrix::max_entry() const {
    Money m;
    for (Money e : entries_) m = std::max(m, e);
    return m;
}

ClassificationCostMatrix make_cost_matrix(const TestCostSchema& schema,
                                          const std::vector<std::string>& classes,
                                          Money positive_error, Money negative_error) {
    const int c = static_cast<int>(classes.size());
    std::vector<Money> entries(static_cast<std::size_t>(c) * c);
    for (int g = 0; g < c; ++g) {
        for (int a = 0; a < c; ++a) {
            if (g == a) continue;
            bool guess_pos = schema.is_positive_class(classes[g]);
            bool actual_pos = schema.is_positive_class(classes[a]);
            Money v;
            if (actual_pos && !guess_pos) v = negative_error;
            else if (!actual_pos && guess_pos) v = positive_error;
            else v = std::min(negative_error, positive_error);
            entries[g * c + a] = v;
        }
    }
    return ClassificationCostMatrix(classes, std::move(entries));
}

ClassificationCostMatrix make_simple_matrix(const std::vector<std::string>& classes, Money k) {
    const int c = static_cast<int>(classes.size());
    std::vector<Money> entries(static_cast<std::size_t>(c) * c);
    for (int g = 0; g < c; ++g)
        for (int a = 0; a < c; ++a)
            if (g != a) entries[g * c + a] = k;
    return ClassificationCostMatrix(classes, std::move(entries));
}

} // namespace icet
