#include "transfun/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transfun/error.hpp"

namespace transfun {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      fail(Errc::dimension_mismatch, "row " + std::to_string(r) + " has " +
                                         std::to_string(rows[r].size()) + " entries, expected " +
                                         std::to_string(m.cols_));
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

double Matrix::column_sum(std::size_t c) const {
  double s = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

double Matrix::max_column_sum() const {
  double best = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) best = std::max(best, column_sum(c));
  return best;
}

double Matrix::max_entry() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(Errc::dimension_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                       std::to_string(a.cols()) + " by " +
                                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

void validate_nonnegative(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double v = m(r, c);
      auto where = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (!std::isfinite(v)) fail(Errc::non_finite, "matrix entry " + where + " is not finite");
      if (v < 0.0) fail(Errc::negative_mass, "matrix entry " + where + " is negative");
    }
  }
}

}  // namespace transfun
