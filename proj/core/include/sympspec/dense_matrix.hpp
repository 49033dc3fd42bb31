#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sympspec {

/// Row-major dense matrix of doubles. Entries are validated finite when a
/// matrix is built from external data (vector constructor, CSV parse);
/// in-place writes through operator() are the caller's responsibility.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }

    const std::vector<double>& entries() const { return data_; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return mat_mul(a, b); }
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double c, const DenseMatrix& a);

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix identity(std::size_t n);
double frobenius(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);

/// (m + m^T)/2, exactly symmetric entrywise.
DenseMatrix symmetrize(const DenseMatrix& m);
/// ||m - m^T||_inf (max abs entry of the difference).
double asymmetry(const DenseMatrix& m);

/// CSV, one row per line, decimal floats, no header. Ragged rows are errors.
DenseMatrix read_csv(std::istream& in);
DenseMatrix read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const DenseMatrix& m);

} // namespace sympspec
