#ifndef QGR_MATRIX_HPP
#define QGR_MATRIX_HPP

#include <map>
#include <vector>

#include "qgr/errors.hpp"

namespace qgr {

// Dense matrix over an arbitrary commutative ring T. T needs default
// construction to zero-like, +, *, unary -, and ==.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    const T& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

// Minor of the first popcount(mask) rows on the column set `mask`, computed
// bottom-up over subsets. Exact in exact coefficient rings; no divisions.
template <class T>
T minor_by_expansion(const Matrix<T>& m, uint64_t mask, std::map<uint64_t, T>& memo, const T& one) {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = __builtin_popcountll(mask) - 1;
    T acc{};
    int position = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (!(mask & (uint64_t{1} << c))) continue;
        T sub = minor_by_expansion(m, mask & ~(uint64_t{1} << c), memo, one);
        T contrib = m.at(row, c) * sub;
        if (position % 2 == row % 2)
            acc = T(acc + contrib);
        else
            acc = T(acc + (-contrib));
        ++position;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// Determinant by Laplace expansion with subset memoization; exact for exact
// rings, O(2^k) minors for a k x k matrix (k <= 12 in this project).
template <class T>
T det(const Matrix<T>& m, const T& one) {
    if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
    if (m.rows() == 0) return one;
    if (m.rows() > 62) throw input_error("determinant dimension too large");
    std::map<uint64_t, T> memo;
    uint64_t full = (m.cols() == 64) ? ~uint64_t{0} : ((uint64_t{1} << m.cols()) - 1);
    return detail::minor_by_expansion(m, full, memo, one);
}

// All maximal minors of a p x n matrix (p <= n), keyed by the increasing
// column subset. One shared subset expansion covers every minor.
template <class T>
std::map<std::vector<int>, T> all_maximal_minors(const Matrix<T>& m, const T& one) {
    const int p = m.rows(), n = m.cols();
    if (p > n) throw input_error("maximal minors require rows <= cols");
    if (n > 62) throw input_error("too many columns for subset expansion");
    std::map<uint64_t, T> memo;
    std::map<std::vector<int>, T> out;
    std::vector<int> cols(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) cols[static_cast<size_t>(i)] = i;
    while (true) {
        uint64_t mask = 0;
        std::vector<int> key(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) {
            mask |= uint64_t{1} << cols[static_cast<size_t>(i)];
            key[static_cast<size_t>(i)] = cols[static_cast<size_t>(i)] + 1;  // 1-based
        }
        out.emplace(std::move(key), detail::minor_by_expansion(m, mask, memo, one));
        int i = p - 1;
        while (i >= 0 && cols[static_cast<size_t>(i)] == n - (p - i)) --i;
        if (i < 0) break;
        ++cols[static_cast<size_t>(i)];
        for (int j = i + 1; j < p; ++j) cols[static_cast<size_t>(j)] = cols[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace qgr

#endif
