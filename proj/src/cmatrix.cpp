#include "maffkit/cmatrix.hpp"

#include <cmath>

#include "maffkit/kernels.hpp"

namespace maff {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::bad_input, "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, complexd(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diag(const std::vector<complexd>& entries) {
  const int n = static_cast<int>(entries.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<complexd>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  CMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) fail(errc::bad_input, "ragged initializer");
    int j = 0;
    for (const auto& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::column(const std::vector<complexd>& entries) {
  CMatrix m(static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data()[i] = std::conj(data_[i]);
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::dimension_mismatch, "matrix product");
  CMatrix out(rows_, rhs.cols_);
  if (rows_ == 0 || cols_ == 0 || rhs.cols_ == 0) return out;
  kernels::cgemm(reinterpret_cast<const double*>(data_.data()),
                 reinterpret_cast<const double*>(rhs.data_.data()),
                 reinterpret_cast<double*>(out.data_.data()), rows_, cols_, rhs.cols_);
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  CMatrix out = *this;
  out += rhs;
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  CMatrix out = *this;
  out -= rhs;
  return out;
}

CMatrix CMatrix::operator-() const { return complexd(-1.0, 0.0) * (*this); }

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix sum");
  if (!data_.empty())
    kernels::caxpy(1.0, 0.0, reinterpret_cast<const double*>(rhs.data_.data()),
                   reinterpret_cast<double*>(data_.data()), static_cast<int>(data_.size()));
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix difference");
  if (!data_.empty())
    kernels::caxpy(-1.0, 0.0, reinterpret_cast<const double*>(rhs.data_.data()),
                   reinterpret_cast<double*>(data_.data()), static_cast<int>(data_.size()));
  return *this;
}

CMatrix CMatrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
    fail(errc::dimension_mismatch, "block out of range");
  CMatrix out(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void CMatrix::set_block(int r0, int c0, const CMatrix& value) {
  if (r0 < 0 || c0 < 0 || r0 + value.rows() > rows_ || c0 + value.cols() > cols_)
    fail(errc::dimension_mismatch, "block out of range");
  for (int i = 0; i < value.rows(); ++i)
    for (int j = 0; j < value.cols(); ++j) at(r0 + i, c0 + j) = value.at(i, j);
}

CMatrix CMatrix::col(int c) const { return block(0, c, rows_, 1); }

double CMatrix::fro_norm() const {
  if (data_.empty()) return 0.0;
  return std::sqrt(kernels::fro_norm_sq(reinterpret_cast<const double*>(data_.data()),
                                        static_cast<int>(data_.size())));
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool CMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double CMatrix::hermitian_defect() const {
  if (!is_square()) fail(errc::dimension_mismatch, "hermitian defect of non-square matrix");
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const complexd d = at(i, j) - std::conj(at(j, i));
      s += std::norm(d);
    }
  return std::sqrt(s);
}

CMatrix operator*(complexd scale, const CMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  if (!m.data().empty())
    kernels::caxpy(scale.real(), scale.imag(), reinterpret_cast<const double*>(m.data().data()),
                   reinterpret_cast<double*>(out.data().data()),
                   static_cast<int>(m.data().size()));
  return out;
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "hstack");
  CMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

CMatrix vstack(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.cols()) fail(errc::dimension_mismatch, "vstack");
  CMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const complexd v = a.at(i, j);
      if (v == complexd(0.0, 0.0)) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          out.at(i * b.rows() + r, j * b.cols() + c) = v * b.at(r, c);
    }
  return out;
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_hermitian: return "NotHermitian";
    case errc::no_convergence: return "NoConvergence";
    case errc::not_psd: return "NotPsd";
    case errc::not_projection: return "NotProjection";
    case errc::range_not_contained: return "RangeNotContained";
    case errc::ranges_differ: return "RangesDiffer";
    case errc::nullspace_violation: return "NullspaceViolation";
    case errc::outside_domain: return "OutsideDomain";
    case errc::not_injective: return "NotInjective";
    case errc::not_in_algebra: return "NotInAlgebra";
    case errc::not_affiliated: return "NotAffiliated";
    case errc::not_positive: return "NotPositive";
    case errc::not_in_f: return "NotInF";
    case errc::not_an_extension: return "NotAnExtension";
    case errc::not_contractive: return "NotContractive";
    case errc::initial_not_in_f: return "InitialNotInF";
    case errc::no_extension_found: return "NoExtensionFound";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace maff
