#include "mpinv/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace mpinv {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& lik = at(i, k);
            if (lik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return out;
}

int IntMatrix::rank() const {
    IntMatrix m = *this;
    int r = 0;
    BigInt prev(1);
    for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows_; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        // Bareiss step: all divisions by the previous pivot are exact.
        for (int i = r + 1; i < m.rows_; ++i) {
            for (int j = c + 1; j < m.cols_; ++j) {
                BigInt num = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

}  // namespace mpinv
