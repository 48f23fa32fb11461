#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace icet {

// Missing values travel as NaN; discrete attributes store an index into
// their declared value list.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double v) { return std::isnan(v); }

struct AttributeMeta {
    std::string name;
    bool continuous = true;
    std::vector<std::string> values; // declared domain, discrete only
    int index = 0;                   // ordinal position among attributes

    int value_index(const std::string& token) const; // -1 if unknown
};

// Describes the layout of a raw data file: every column in file order,
// how the class label is obtained, and the field separator.
struct DatasetDescriptor {
    struct Column {
        enum Kind { Continuous, Discrete, Class };
        std::string name;
        Kind kind = Continuous;
        std::vector<std::string> values;
    };

    enum class MissingPolicy { None, Drop, Impute };

    std::vector<Column> columns;
    std::vector<std::string> classes;
    std::map<std::string, std::string> class_map; // raw token -> class label
    bool whitespace_separated = false;
    MissingPolicy missing = MissingPolicy::None;

    // Alternative to a class column: label = classes[0] iff the named
    // column's value < threshold, else classes[1].
    std::string threshold_column;
    double threshold = 0.0;
    bool use_threshold = false;

    static DatasetDescriptor load(const std::string& path);
    void validate() const;
};

class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<AttributeMeta> attributes, std::vector<std::string> classes);

    void add_case(const std::vector<double>& values, int label);

    int n_cases() const { return static_cast<int>(labels_.size()); }
    int n_attributes() const { return static_cast<int>(attributes_.size()); }
    int n_classes() const { return static_cast<int>(classes_.size()); }

    double value(int case_idx, int attr) const {
        return values_[static_cast<std::size_t>(case_idx) * attributes_.size() + attr];
    }
    bool missing(int case_idx, int attr) const { return is_missing(value(case_idx, attr)); }
    int label(int case_idx) const { return labels_[case_idx]; }

    std::vector<double> case_values(int case_idx) const;
    bool case_complete(int case_idx) const;
    int missing_count() const;

    const AttributeMeta& attribute(int attr) const { return attributes_[attr]; }
    const std::vector<AttributeMeta>& attributes() const { return attributes_; }
    const std::vector<std::string>& classes() const { return classes_; }
    int class_index(const std::string& label) const; // -1 if unknown

    Dataset subset(const std::vector<int>& rows) const;

    // Throws std::runtime_error when a structural invariant is broken
    // (duplicate attribute names, label out of range, ...).
    void validate() const;

private:
    std::vector<AttributeMeta> attributes_;
    std::vector<std::string> classes_;
    std::vector<double> values_; // row-major, n_cases x n_attributes
    std::vector<int> labels_;
};

// Reads a delimited text file ("?" = missing) under the descriptor's layout.
// Errors name the offending 1-based line.
Dataset load_dataset(const std::string& path, const DatasetDescriptor& desc);

// Per-class fraction over the whole dataset; sums to 1.
std::vector<double> class_frequencies(const Dataset& d);

} // namespace icet
