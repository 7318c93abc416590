#include "linalg.hpp"

#include <utility>

#include "errors.hpp"

namespace mcg {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// Fraction-free rank over the integers. Entries stay equal to minors of the
// input, so growth is bounded and every division below is exact.
int rank_bareiss_int(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int rank_bareiss_rat(RatMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  Rational prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

} // namespace

int rank(const RatMatrix& m) {
  bool integral = true;
  for (int r = 0; r < m.rows() && integral; ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c).get_den() != 1) { integral = false; break; }
  if (integral) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) z[r][c] = m.at(r, c).get_num();
    return rank_bareiss_int(std::move(z));
  }
  return rank_bareiss_rat(m);
}

AffineResult solve_affine(const RatMatrix& a, const std::vector<Rational>& b) {
  const int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(b.size()) != rows)
    throw input_error("right-hand side length does not match row count");

  // Gauss-Jordan on [A | b] carrying the row-operation matrix T, so that a
  // zero row of the reduced A with a nonzero reduced b entry hands us the
  // certificate row y = T[i] directly (y A = 0, y b != 0).
  RatMatrix m = a;
  RatMatrix t = RatMatrix::identity(rows);
  std::vector<Rational> rhs = b;

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
      for (int j = 0; j < rows; ++j) std::swap(t.at(r, j), t.at(p, j));
      std::swap(rhs[r], rhs[p]);
    }
    Rational inv = m.at(r, c);
    for (int j = 0; j < cols; ++j) m.at(r, j) /= inv;
    for (int j = 0; j < rows; ++j) t.at(r, j) /= inv;
    rhs[r] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
      for (int j = 0; j < rows; ++j) t.at(i, j) -= f * t.at(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  for (int i = r; i < rows; ++i) {
    if (rhs[i] != 0) {
      std::vector<Rational> y(rows);
      for (int j = 0; j < rows; ++j) y[j] = t.at(i, j);
      return InfeasibilityCertificate{std::move(y)};
    }
  }

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (int i = 0; i < r; ++i) sol.particular[pivot_col[i]] = rhs[i];

  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m.at(i, c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

} // namespace mcg
