#include "mgraph/linalg.hpp"

#include <utility>

#include "mgraph/errors.hpp"

namespace mgraph {

std::vector<Rat> RatMatrix::multiply(const std::vector<Rat>& x) const {
  std::vector<Rat> y(static_cast<size_t>(rows_), Rat(0));
  for (int i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = std::move(acc);
  }
  return y;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

PinnedSolver::PinnedSolver(const RatMatrix& m, int pinned)
    : n_(m.rows()), pinned_(pinned), lu_(m.rows() - 1, m.rows() - 1) {
  const int r = n_ - 1;
  auto reduced = [&](int i) { return i < pinned_ ? i : i + 1; };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      lu_(i, j) = m(reduced(i), reduced(j));
    }
  }

  perm_.resize(r);
  for (int i = 0; i < r; ++i) perm_[i] = i;

  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int row = col; row < r; ++row) {
      if (lu_(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      throw SingularSystem("pinned system is singular at column " +
                           std::to_string(col));
    }
    if (pivot != col) {
      std::swap(perm_[pivot], perm_[col]);
      for (int j = 0; j < r; ++j) {
        Rat tmp = lu_(pivot, j);
        lu_(pivot, j) = lu_(col, j);
        lu_(col, j) = std::move(tmp);
      }
    }
    for (int row = col + 1; row < r; ++row) {
      if (lu_(row, col) == 0) continue;
      Rat factor = lu_(row, col) / lu_(col, col);
      lu_(row, col) = factor;
      for (int j = col + 1; j < r; ++j) {
        lu_(row, j) -= factor * lu_(col, j);
      }
    }
  }
}

std::vector<Rat> PinnedSolver::solve(const std::vector<Rat>& rhs) const {
  const int r = n_ - 1;
  auto reduced = [&](int i) { return i < pinned_ ? i : i + 1; };

  std::vector<Rat> y(static_cast<size_t>(r), Rat(0));
  for (int i = 0; i < r; ++i) y[i] = rhs[reduced(perm_[i])];

  // Forward substitution with the unit lower factor.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < i; ++j) y[i] -= lu_(i, j) * y[j];
  }
  // Back substitution.
  for (int i = r - 1; i >= 0; --i) {
    for (int j = i + 1; j < r; ++j) y[i] -= lu_(i, j) * y[j];
    y[i] /= lu_(i, i);
  }

  std::vector<Rat> x(static_cast<size_t>(n_), Rat(0));
  for (int i = 0; i < r; ++i) x[reduced(i)] = std::move(y[i]);
  return x;
}

std::vector<Rat> solve_pinned(const RatMatrix& m, const std::vector<Rat>& rhs,
                              int pinned) {
  if (m.rows() == 1) return {Rat(0)};
  return PinnedSolver(m, pinned).solve(rhs);
}

}  // namespace mgraph
