#include "taildep/data_matrix.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace taildep {

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw DataError("empty data");
    const int d = static_cast<int>(rows.front().size());
    DataMatrix m(static_cast<int>(rows.size()), d);
    for (int i = 0; i < m.n(); ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw DataError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) +
                            " columns, expected " + std::to_string(d));
        for (int j = 0; j < d; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

void DataMatrix::validate() const {
    if (n_ < 2 || d_ < 2)
        throw DataError("need at least 2 rows and 2 columns, got n=" +
                        std::to_string(n_) + ", d=" + std::to_string(d_));
    for (double v : values_)
        if (!std::isfinite(v)) throw DataError("non-finite entry in data");
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

bool parse_double(const std::string& field, double& out) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return false;
    // Trailing whitespace only.
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

}  // namespace

DataMatrix load_csv(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);

    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    bool header_pending = opts.header;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_line(line, opts.delimiter);
        if (header_pending) {
            column_names = std::move(fields);
            header_pending = false;
            continue;
        }
        std::vector<double> row(fields.size());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (!parse_double(fields[j], row[j])) {
                const std::string col =
                    j < column_names.size()
                        ? "'" + column_names[j] + "'"
                        : std::to_string(j + 1);
                throw DataError(path + ":" + std::to_string(lineno) +
                                ": non-numeric entry '" + fields[j] +
                                "' in column " + col);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError(path + ": no data rows");
    return DataMatrix::from_rows(rows);
}

void write_csv(const std::string& path, const DataMatrix& data,
               const CsvOptions& opts) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    out.precision(17);
    if (opts.header) {
        for (int j = 0; j < data.d(); ++j) {
            if (j) out << opts.delimiter;
            out << "x" << (j + 1);
        }
        out << '\n';
    }
    for (int i = 0; i < data.n(); ++i) {
        for (int j = 0; j < data.d(); ++j) {
            if (j) out << opts.delimiter;
            out << data(i, j);
        }
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path);
}

}  // namespace taildep
