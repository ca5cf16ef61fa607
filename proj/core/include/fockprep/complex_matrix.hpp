#pragma once

#include <cstddef>
#include <vector>

#include "fockprep/math_kernel.hpp"

namespace fockprep {

/// Minimal dense complex matrix (row major). Just enough linear algebra for
/// operator-level checks and displacement application.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Complex(0.0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    ComplexMatrix adjoint() const;

    /// Matrix times zero-padded/truncated vector; result has rows() entries.
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_;
    int cols_;
    std::vector<Complex> data_;
};

} // namespace fockprep
