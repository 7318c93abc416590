#pragma once

#include <variant>
#include <vector>

#include "rational.hpp"

namespace mcg {

// Dense exact-rational matrices, sized for desk-scale certificates (a few
// thousand rows at most). Elimination is fraction-free in the Bareiss style
// to keep intermediate values small; pivots are the first nonzero entry in
// column order, so results are deterministic.

class RatMatrix {
public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  static RatMatrix identity(int n);
  RatMatrix transpose() const;

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

int rank(const RatMatrix& m);

struct AffineSolution {
  std::vector<Rational> particular;               // free variables set to 0
  std::vector<std::vector<Rational>> nullspace;   // basis of {x : Ax = 0}
};

// Farkas witness for an inconsistent system: a row combination y with
// y^T A = 0 and y^T b != 0.
struct InfeasibilityCertificate {
  std::vector<Rational> row_combination;
};

using AffineResult = std::variant<AffineSolution, InfeasibilityCertificate>;

// Solve A x = b exactly, or certify that no solution exists.
AffineResult solve_affine(const RatMatrix& a, const std::vector<Rational>& b);

} // namespace mcg
