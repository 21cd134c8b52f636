// Dense exact linear algebra over Q(i): reduced row echelon form with
// deterministic pivoting, nullspace bases, and affine solves.
#ifndef SUPERBC_LINALG_HPP
#define SUPERBC_LINALG_HPP

#include <vector>

#include "superbc/scalar.hpp"

namespace superbc {

class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return data_[r * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[r * cols_ + c]; }

    static ExactMatrix identity(int n);

    void append_row(const std::vector<Scalar>& row);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // M * v

    // in-place Gauss-Jordan; pivots chosen as the first nonzero entry in
    // row-major scan order. Returns pivot column indices.
    std::vector<int> rref();

    int rank() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// basis of {v : M v = 0}; deterministic given the pivoting rule
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m);

struct SolveResult {
    enum class Status { Unique, Inconsistent, Underdetermined } status;
    std::vector<Scalar> solution; // valid for Unique (a particular one for Underdetermined)
    int kernel_dim = 0;
};

SolveResult solve(const ExactMatrix& a, const std::vector<Scalar>& b);

ExactMatrix inverse(const ExactMatrix& m); // throws on singular input

}  // namespace superbc

#endif
