#include "icet/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace icet {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_fields(const std::string& line, bool whitespace) {
    if (whitespace) return tokenize(line);
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    out.push_back(trim(field));
    return out;
}

double parse_number(const std::string& tok, const std::string& where) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::runtime_error(where + ": cannot parse value '" + tok + "'");
    return v;
}

} // namespace

int AttributeMeta::value_index(const std::string& token) const {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == token) return static_cast<int>(i);
    return -1;
}

DatasetDescriptor DatasetDescriptor::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open descriptor file: " + path);

    DatasetDescriptor d;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);

        if (toks[0] == "separator") {
            if (toks.size() != 2 || (toks[1] != "comma" && toks[1] != "space"))
                throw std::runtime_error(where + ": separator must be 'comma' or 'space'");
            d.whitespace_separated = (toks[1] == "space");
        } else if (toks[0] == "column") {
            if (toks.size() < 3) throw std::runtime_error(where + ": column needs a name and a kind");
            Column col;
            col.name = toks[1];
            if (toks[2] == "continuous") {
                col.kind = Column::Continuous;
            } else if (toks[2] == "discrete") {
                col.kind = Column::Discrete;
                col.values.assign(toks.begin() + 3, toks.end());
                if (col.values.size() < 2)
                    throw std::runtime_error(where + ": discrete column needs >=2 declared values");
            } else if (toks[2] == "class") {
                col.kind = Column::Class;
            } else {
                throw std::runtime_error(where + ": unknown column kind '" + toks[2] + "'");
            }
            d.columns.push_back(std::move(col));
        } else if (toks[0] == "classes") {
            d.classes.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "class_map") {
            if (toks.size() != 3) throw std::runtime_error(where + ": class_map <raw> <label>");
            d.class_map[toks[1]] = toks[2];
        } else if (toks[0] == "class_threshold") {
            if (toks.size() != 3) throw std::runtime_error(where + ": class_threshold <column> <value>");
            d.threshold_column = toks[1];
            d.threshold = parse_number(toks[2], where);
            d.use_threshold = true;
        } else if (toks[0] == "missing") {
            if (toks.size() != 2 || (toks[1] != "drop" && toks[1] != "impute"))
                throw std::runtime_error(where + ": missing must be 'drop' or 'impute'");
            d.missing = toks[1] == "drop" ? MissingPolicy::Drop : MissingPolicy::Impute;
        } else {
            throw std::runtime_error(where + ": unknown directive '" + toks[0] + "'");
        }
    }
    d.validate();
    return d;
}

void DatasetDescriptor::validate() const {
    if (columns.empty()) throw std::runtime_error("descriptor declares no columns");
    if (classes.size() < 2) throw std::runtime_error("descriptor must declare >=2 classes");

    int class_cols = 0;
    std::set<std::string> names;
    for (const auto& c : columns) {
        if (!names.insert(c.name).second)
            throw std::runtime_error("duplicate column name '" + c.name + "'");
        if (c.kind == Column::Class) ++class_cols;
    }
    if (use_threshold) {
        if (class_cols != 0)
            throw std::runtime_error("class_threshold and a class column are mutually exclusive");
        if (classes.size() != 2)
            throw std::runtime_error("class_threshold requires exactly 2 classes");
        bool found = false;
        for (const auto& c : columns)
            if (c.name == threshold_column) found = true;
        if (!found)
            throw std::runtime_error("class_threshold column '" + threshold_column + "' not declared");
    } else if (class_cols != 1) {
        throw std::runtime_error("descriptor needs exactly one class column (or class_threshold)");
    }
}

Dataset::Dataset(std::vector<AttributeMeta> attributes, std::vector<std::string> classes)
    : attributes_(std::move(attributes)), classes_(std::move(classes)) {
    for (std::size_t i = 0; i < attributes_.size(); ++i)
        attributes_[i].index = static_cast<int>(i);
}

void Dataset::add_case(const std::vector<double>& values, int label) {
    if (values.size() != attributes_.size())
        throw std::runtime_error("case arity mismatch");
    if (label < 0 || label >= n_classes())
        throw std::runtime_error("class label out of range");
    values_.insert(values_.end(), values.begin(), values.end());
    labels_.push_back(label);
}

std::vector<double> Dataset::case_values(int case_idx) const {
    auto begin = values_.begin() + static_cast<std::ptrdiff_t>(case_idx) * n_attributes();
    return {begin, begin + n_attributes()};
}

bool Dataset::case_complete(int case_idx) const {
    for (int a = 0; a < n_attributes(); ++a)
        if (missing(case_idx, a)) return false;
    return true;
}

int Dataset::missing_count() const {
    int n = 0;
    for (double v : values_)
        if (is_missing(v)) ++n;
    return n;
}

int Dataset::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == label) return static_cast<int>(i);
    return -1;
}

Dataset Dataset::subset(const std::vector<int>& rows) const {
    Dataset out(attributes_, classes_);
    for (int r : rows) out.add_case(case_values(r), label(r));
    return out;
}

void Dataset::validate() const {
    std::set<std::string> names;
    for (const auto& a : attributes_) {
        if (!names.insert(a.name).second)
            throw std::runtime_error("duplicate attribute name '" + a.name + "'");
        if (!a.continuous && a.values.size() < 2)
            throw std::runtime_error("discrete attribute '" + a.name + "' needs >=2 values");
    }
    for (int label : labels_)
        if (label < 0 || label >= n_classes())
            throw std::runtime_error("class label out of range");
}

Dataset load_dataset(const std::string& path, const DatasetDescriptor& desc) {
    desc.validate();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    using Column = DatasetDescriptor::Column;
    std::vector<AttributeMeta> attrs;
    int class_col = -1, threshold_col = -1;
    std::vector<int> attr_of_column(desc.columns.size(), -1);
    for (std::size_t c = 0; c < desc.columns.size(); ++c) {
        const Column& col = desc.columns[c];
        if (col.kind == Column::Class) {
            class_col = static_cast<int>(c);
            continue;
        }
        AttributeMeta m;
        m.name = col.name;
        m.continuous = (col.kind == Column::Continuous);
        m.values = col.values;
        attr_of_column[c] = static_cast<int>(attrs.size());
        attrs.push_back(std::move(m));
        if (desc.use_threshold && col.name == desc.threshold_column)
            threshold_col = static_cast<int>(c);
    }

    Dataset d(std::move(attrs), desc.classes);

    std::string line;
    int lineno = 0, rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);

        auto fields = split_fields(stripped, desc.whitespace_separated);
        if (fields.size() != desc.columns.size())
            throw std::runtime_error(where + ": expected " + std::to_string(desc.columns.size()) +
                                     " fields, got " + std::to_string(fields.size()));

        std::vector<double> values(d.n_attributes(), kMissing);
        int label = -1;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const Column& col = desc.columns[c];
            const std::string& tok = fields[c];
            if (col.kind == Column::Class) {
                std::string mapped = tok;
                auto it = desc.class_map.find(tok);
                if (it != desc.class_map.end()) mapped = it->second;
                label = d.class_index(mapped);
                if (label < 0)
                    throw std::runtime_error(where + ": unknown class label '" + tok + "'");
                continue;
            }
            if (tok == "?") continue; // stays missing
            int a = attr_of_column[c];
            if (col.kind == Column::Continuous) {
                values[a] = parse_number(tok, where + ": attribute '" + col.name + "'");
            } else {
                int vi = d.attribute(a).value_index(tok);
                if (vi < 0)
                    throw std::runtime_error(where + ": attribute '" + col.name +
                                             "': undeclared value '" + tok + "'");
                values[a] = vi;
            }
        }

        if (desc.use_threshold) {
            double v = values[attr_of_column[threshold_col]];
            if (is_missing(v))
                throw std::runtime_error(where + ": class-defining column '" +
                                         desc.threshold_column + "' is missing");
            label = (v < desc.threshold) ? 0 : 1;
        }
        d.add_case(values, label);
        ++rows;
    }
    if (rows == 0) throw std::runtime_error(path + ": empty dataset");
    d.validate();
    return d;
}

std::vector<double> class_frequencies(const Dataset& d) {
    if (d.n_cases() == 0) throw std::runtime_error("class_frequencies: empty dataset");
    std::vector<double> f(d.n_classes(), 0.0);
    for (int c = 0; c < d.n_cases(); ++c) f[d.label(c)] += 1.0;
    for (double& x : f) x /= d.n_cases();
    return f;
}

} // namespace icet
