#pragma once

#include <stdexcept>
#include <vector>

namespace ffmzv {

// Exact dense linear algebra over any field value type providing
// +, -, *, inv(), is_zero(), one() and copy semantics.

template <class T>
struct LinSolveResult {
    enum Kind { Unique, Underdetermined, Inconsistent } kind = Unique;
    std::vector<T> particular;          // empty when inconsistent
    std::vector<std::vector<T>> kernel; // basis of the homogeneous solutions
    int rank = 0;
};

template <class T>
using Mat = std::vector<std::vector<T>>;

// Row-reduce [M | rhs] in place; returns pivot column of each pivot row.
// Among candidate pivot rows the sparsest is taken, which curbs the
// coefficient growth exact fraction fields suffer under elimination.
template <class T>
std::vector<int> row_reduce(Mat<T>& m, std::vector<T>* rhs) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        size_t best_weight = size_t(-1);
        for (size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            size_t w = 0;
            for (size_t j = 0; j < cols; ++j)
                if (!m[i][j].is_zero()) ++w;
            if (w < best_weight) {
                best_weight = w;
                sel = i;
            }
        }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        if (rhs) std::swap((*rhs)[sel], (*rhs)[r]);
        T ip = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * ip;
        if (rhs) (*rhs)[r] = (*rhs)[r] * ip;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            T factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
            if (rhs) (*rhs)[i] = (*rhs)[i] - factor * (*rhs)[r];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Mat<T> m) {
    return int(row_reduce<T>(m, nullptr).size());
}

// Exact Gaussian elimination with explicit classification.  The zero and
// one of the field are taken from `zero` (field data travels with the
// values for runtime fields).
template <class T>
LinSolveResult<T> linear_solve(Mat<T> m, std::vector<T> rhs, const T& zero) {
    if (m.size() != rhs.size()) throw std::invalid_argument("linear_solve: dimension mismatch");
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("linear_solve: ragged matrix");

    std::vector<int> pivots = row_reduce(m, &rhs);
    LinSolveResult<T> res;
    res.rank = int(pivots.size());

    for (size_t i = pivots.size(); i < rows; ++i)
        if (!rhs[i].is_zero()) {
            res.kind = LinSolveResult<T>::Inconsistent;
            return res;
        }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[size_t(c)] = true;

    res.particular.assign(cols, zero);
    for (size_t i = 0; i < pivots.size(); ++i) res.particular[size_t(pivots[i])] = rhs[i];

    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(cols, zero);
        v[c] = zero.one();
        for (size_t i = 0; i < pivots.size(); ++i)
            v[size_t(pivots[i])] = zero - m[i][c];
        res.kernel.push_back(std::move(v));
    }
    res.kind = res.kernel.empty() ? LinSolveResult<T>::Unique : LinSolveResult<T>::Underdetermined;
    return res;
}

}  // namespace ffmzv
