#pragma once

#include <vector>

#include "mpinv/rational.hpp"

namespace mpinv {

// Dense integer matrix with exact rank via fraction-free elimination.
// Zero-row and zero-column shapes are legal and behave as expected.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    // Block-diagonal stack: [this 0; 0 rhs].
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    // Rank over the rationals, Bareiss fraction-free elimination.
    int rank() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

}  // namespace mpinv
