#include "koszulforge/fp.hpp"

#include <algorithm>
#include <string>

namespace kf {

namespace {

bool is_prime(Scalar p) {
  if (p < 2) return false;
  for (Scalar q = 2; std::uint64_t(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

} // namespace

Fp::Fp(Scalar p) : p_(p) {
  if (!is_prime(p))
    throw ValidationError("modulus " + std::to_string(p) + " is not prime");
}

Scalar Fp::pow(Scalar a, std::uint64_t e) const {
  Scalar r = 1 % p_;
  Scalar base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Scalar Fp::inv(Scalar a) const {
  if (a % p_ == 0) throw ValidationError("division by zero in F_p");
  return pow(a, p_ - 2);
}

FpMatrix FpMatrix::identity(Fp field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(Fp field, const std::vector<FpVector>& rows,
                             std::size_t cols) {
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ValidationError("row length mismatch: expected " +
                            std::to_string(cols) + ", got " +
                            std::to_string(rows[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % field.p();
  }
  return m;
}

FpVector FpMatrix::row(std::size_t r) const {
  FpVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RrefResult rref_with_kernel(const FpMatrix& m) {
  const Fp& f = m.field();
  FpMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(a.at(sel, k), a.at(r, k));
    const Scalar piv_inv = f.inv(a.at(r, c));
    for (std::size_t k = c; k < cols; ++k)
      a.at(r, k) = f.mul(a.at(r, k), piv_inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Scalar t = a.at(i, c);
      for (std::size_t k = c; k < cols; ++k)
        a.at(i, k) = f.sub(a.at(i, k), f.mul(t, a.at(r, k)));
    }
    pivot_col.push_back(c);
    ++r;
  }
  const std::size_t rk = r;

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  // One kernel vector per free column: set that coordinate to 1 and read the
  // pivot coordinates off the rref.
  std::vector<FpVector> kernel;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FpVector v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < rk; ++i)
      v[pivot_col[i]] = f.neg(a.at(i, c));
    kernel.push_back(std::move(v));
  }
  return RrefResult{std::move(a), rk, std::move(kernel)};
}

std::size_t rank(const FpMatrix& m) { return rref_with_kernel(m).rank; }

std::vector<FpVector> row_space_canonical(const std::vector<FpVector>& vectors,
                                          std::size_t ambient_dim, Fp field) {
  RrefResult res =
      rref_with_kernel(FpMatrix::from_rows(field, vectors, ambient_dim));
  std::vector<FpVector> rows;
  rows.reserve(res.rank);
  for (std::size_t r = 0; r < res.rank; ++r) rows.push_back(res.rref.row(r));
  return rows;
}

std::vector<FpVector> annihilator(const std::vector<FpVector>& basis,
                                  std::size_t ambient_dim, Fp field) {
  RrefResult res =
      rref_with_kernel(FpMatrix::from_rows(field, basis, ambient_dim));
  return row_space_canonical(res.kernel, ambient_dim, field);
}

EchelonAccumulator::EchelonAccumulator(Fp field, std::size_t len)
    : field_(field), len_(len) {
  const std::uint64_t step = std::uint64_t(field.p() - 1) * (field.p() - 1);
  safe_adds_ = step == 0 ? std::size_t(-1) : std::size_t(65535 / step);
  if (safe_adds_ == 0) safe_adds_ = 1;
}

bool EchelonAccumulator::insert(const FpVector& row) {
  std::vector<std::uint16_t> r(len_);
  for (std::size_t k = 0; k < len_; ++k)
    r[k] = static_cast<std::uint16_t>(row[k] % field_.p());
  return insert(std::move(r));
}

bool EchelonAccumulator::insert(std::vector<std::uint16_t> row) {
  const Scalar p = field_.p();
  for (auto& x : row) x = static_cast<std::uint16_t>(x % p);
  std::size_t dirty = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivot_[i];
    const Scalar v = row[c] % p;
    if (v == 0) {
      row[c] = 0;
      continue;
    }
    if (dirty + 1 > safe_adds_) {
      for (auto& x : row) x = static_cast<std::uint16_t>(x % p);
      dirty = 0;
    }
    // row += (p - v) * rows_[i]; pivot rows are reduced, so each entry grows
    // by at most (p-1)^2.
    const std::uint16_t mult = static_cast<std::uint16_t>(p - v);
    const std::uint16_t* piv = rows_[i].data();
    std::uint16_t* dst = row.data();
    for (std::size_t k = c; k < len_; ++k) dst[k] += mult * piv[k];
    ++dirty;
    row[c] = 0; // exact by construction, skip the mod
  }
  std::size_t lead = len_;
  for (std::size_t k = 0; k < len_; ++k) {
    row[k] = static_cast<std::uint16_t>(row[k] % p);
    if (lead == len_ && row[k] != 0) lead = k;
  }
  if (lead == len_) return false;
  const Scalar s = field_.inv(row[lead]);
  for (std::size_t k = lead; k < len_; ++k)
    row[k] = static_cast<std::uint16_t>(field_.mul(row[k], s));
  auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), lead);
  const std::size_t idx = std::size_t(pos - pivot_.begin());
  pivot_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

std::vector<FpVector> EchelonAccumulator::rows() const {
  std::vector<FpVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    FpVector v(len_);
    for (std::size_t k = 0; k < len_; ++k) v[k] = r[k];
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace kf
