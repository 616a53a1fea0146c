#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "maffkit/errors.hpp"

namespace maff {

using complexd = std::complex<double>;

/// Dense complex matrix, row-major. Values are immutable in spirit: every
/// operation returns a fresh matrix.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(int rows, int cols);  // zero-filled

  static CMatrix identity(int n);
  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }
  static CMatrix diag(const std::vector<complexd>& entries);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<complexd>> rows);
  static CMatrix column(const std::vector<complexd>& entries);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  complexd& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const complexd& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<complexd>& data() const noexcept { return data_; }
  std::vector<complexd>& data() noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;

  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix operator-() const;
  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);

  CMatrix block(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const CMatrix& value);
  CMatrix col(int c) const;

  double fro_norm() const;
  double max_abs() const;
  bool all_finite() const;

  /// ||A - A*||_F
  double hermitian_defect() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<complexd> data_;
};

CMatrix operator*(complexd scale, const CMatrix& m);
inline CMatrix operator*(double scale, const CMatrix& m) { return complexd(scale, 0.0) * m; }

CMatrix hstack(const CMatrix& a, const CMatrix& b);
CMatrix vstack(const CMatrix& a, const CMatrix& b);
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(errc::dimension_mismatch, where);
}

}  // namespace maff
