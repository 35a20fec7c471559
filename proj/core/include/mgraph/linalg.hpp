#pragma once

#include <vector>

#include "mgraph/rational.hpp"

namespace mgraph {

/// Dense matrix over exact rationals (row-major).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& operator()(int i, int j) const { return data_[idx(i, j)]; }
  Rat& operator()(int i, int j) { return data_[idx(i, j)]; }

  bool operator==(const RatMatrix& other) const = default;

  std::vector<Rat> multiply(const std::vector<Rat>& x) const;
  bool is_symmetric() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact solver for systems L x = b with one coordinate pinned to zero
/// (the row and column of the pinned index are dropped). Factors the reduced
/// matrix once so many right-hand sides share the elimination work. Pivoting
/// picks the first row with a nonzero entry in declared order, which keeps
/// results deterministic. Throws SingularSystem if the reduced matrix is
/// singular (cannot happen for the reduced Laplacian of a connected graph).
class PinnedSolver {
 public:
  PinnedSolver(const RatMatrix& m, int pinned);

  /// Solves with x[pinned] = 0; only the non-pinned equations are imposed.
  std::vector<Rat> solve(const std::vector<Rat>& rhs) const;

 private:
  int n_;       // full dimension
  int pinned_;
  RatMatrix lu_;          // (n-1) x (n-1) LU factors, unit lower diagonal
  std::vector<int> perm_; // row permutation from pivoting
};

/// One-shot convenience wrapper around PinnedSolver.
std::vector<Rat> solve_pinned(const RatMatrix& m, const std::vector<Rat>& rhs,
                              int pinned);

}  // namespace mgraph
