#pragma once

#include <string>
#include <vector>

#include "taildep/errors.hpp"

namespace taildep {

// Raw observations, one row per observation, d numeric columns.
// Row-major storage.
class DataMatrix {
public:
    DataMatrix() = default;
    DataMatrix(int n, int d)
        : n_(n), d_(d), values_(static_cast<std::size_t>(n) * d, 0.0) {}

    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }

    double operator()(int i, int j) const noexcept {
        return values_[static_cast<std::size_t>(i) * d_ + j];
    }
    double& operator()(int i, int j) noexcept {
        return values_[static_cast<std::size_t>(i) * d_ + j];
    }

    const double* row(int i) const noexcept {
        return values_.data() + static_cast<std::size_t>(i) * d_;
    }

    // n >= 2, d >= 2, all entries finite.
    void validate() const;

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<double> values_;
};

struct CsvOptions {
    char delimiter = ',';
    bool header = false;
};

// Loads a numeric CSV. A column with a non-numeric entry is a fatal
// error naming the column (1-based, or its header name when present).
DataMatrix load_csv(const std::string& path, const CsvOptions& opts = {});

void write_csv(const std::string& path, const DataMatrix& data,
               const CsvOptions& opts = {});

}  // namespace taildep
