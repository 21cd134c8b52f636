#include "superbc/linalg.hpp"

#include <stdexcept>

namespace superbc {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

void ExactMatrix::append_row(const std::vector<Scalar>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = (int)row.size();
    if ((int)row.size() != cols_) throw std::invalid_argument("append_row: arity mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    rows_++;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if ((int)v.size() != cols_) throw std::invalid_argument("apply: arity mismatch");
    std::vector<Scalar> out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Scalar acc(0);
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<int> ExactMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int ExactMatrix::rank() const {
    ExactMatrix copy = *this;
    return (int)copy.rref().size();
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at((int)k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const ExactMatrix& a, const std::vector<Scalar>& b) {
    if ((int)b.size() != a.rows()) throw std::invalid_argument("solve: rhs arity mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<int> pivots = aug.rref();
    SolveResult out;
    for (int c : pivots)
        if (c == a.cols()) { out.status = SolveResult::Status::Inconsistent; return out; }
    out.kernel_dim = a.cols() - (int)pivots.size();
    out.solution.assign(a.cols(), Scalar(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        out.solution[pivots[k]] = aug.at((int)k, a.cols());
    out.status = out.kernel_dim == 0 ? SolveResult::Status::Unique
                                     : SolveResult::Status::Underdetermined;
    return out;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Scalar(1);
    }
    std::vector<int> pivots = aug.rref();
    if ((int)pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    ExactMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

}  // namespace superbc
