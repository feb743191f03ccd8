#include "hopfforge/linear_solve.hpp"

#include <stdexcept>

#include "hopfforge/errors.hpp"

namespace hopfforge {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows),
      cols_(cols),
      field_(field),
      data_(rows * cols, Scalar(field, 0)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = Scalar(field, 1);
  }
  return m;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw PreconditionFailed("matrix dimension mismatch");
  }
  Matrix out(lhs.rows_, rhs.cols_, lhs.field_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs.at(i, k);
      if (a.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  Matrix out = identity(rows_, field_);
  for (unsigned i = 0; i < k; ++i) {
    out = out * *this;
  }
  return out;
}

namespace {

std::optional<LinearSolution> solve_rational(const Matrix& A,
                                             const std::vector<Scalar>& b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  // Augmented integer matrix; each row scaled by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      const mpq_class& v = j < n ? A.at(i, j).value() : b[i].value();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const mpq_class& v = j < n ? A.at(i, j).value() : b[i].value();
      M[i][j] = v.get_num() * (l / v.get_den());
    }
  }

  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) {
      ++p;
    }
    if (p == m) {
      continue;
    }
    std::swap(M[p], M[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        mpz_class v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("Bareiss step left a remainder");
        }
        mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (M[i][n] != 0) {
      return std::nullopt;
    }
  }

  LinearSolution sol;
  sol.rank = r;
  sol.unique = r == n;
  std::vector<mpq_class> x(n, 0);
  for (std::size_t k = r; k-- > 0;) {
    std::size_t c = pivot_cols[k];
    mpq_class acc = M[k][n];
    for (std::size_t j = c + 1; j < n; ++j) {
      if (M[k][j] != 0) {
        acc -= mpq_class(M[k][j]) * x[j];
      }
    }
    x[c] = acc / mpq_class(M[k][c]);
    x[c].canonicalize();
  }
  Field q = Field::rationals();
  for (std::size_t j = 0; j < n; ++j) {
    sol.x.push_back(Scalar::fraction(q, x[j].get_num(), x[j].get_den()));
  }
  return sol;
}

std::optional<LinearSolution> solve_prime(const Matrix& A,
                                          const std::vector<Scalar>& b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  const Field field = A.field();
  std::vector<std::vector<Scalar>> M(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      M[i].push_back(A.at(i, j));
    }
    M[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c].is_zero()) {
      ++p;
    }
    if (p == m) {
      continue;
    }
    std::swap(M[p], M[r]);
    Scalar inv = M[r][c].inverse();
    for (std::size_t j = c; j <= n; ++j) {
      M[r][j] *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c].is_zero()) {
        continue;
      }
      Scalar f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) {
        M[i][j] -= f * M[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!M[i][n].is_zero()) {
      return std::nullopt;
    }
  }
  LinearSolution sol;
  sol.rank = r;
  sol.unique = r == n;
  sol.x.assign(n, Scalar(field, 0));
  for (std::size_t k = 0; k < r; ++k) {
    sol.x[pivot_cols[k]] = M[k][n];
  }
  return sol;
}

}  // namespace

std::optional<LinearSolution> solve_linear_system(const Matrix& A,
                                                  const std::vector<Scalar>& b) {
  if (b.size() != A.rows()) {
    throw PreconditionFailed("right-hand side has the wrong length");
  }
  if (A.field().is_rational()) {
    return solve_rational(A, b);
  }
  return solve_prime(A, b);
}

}  // namespace hopfforge
