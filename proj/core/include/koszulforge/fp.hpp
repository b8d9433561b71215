#pragma once

#include <cstdint>
#include <vector>

#include "koszulforge/errors.hpp"

namespace kf {

using Scalar = std::uint32_t;
using FpVector = std::vector<Scalar>;

/// Arithmetic context for the prime field F_p. Residues are plain integers
/// in [0, p); every container storing residues carries one of these.
class Fp {
public:
  explicit Fp(Scalar p);

  Scalar p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;

  /// Reduce an arbitrary signed integer into [0, p).
  Scalar reduce(std::int64_t x) const {
    std::int64_t r = x % std::int64_t(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  bool operator==(const Fp& other) const { return p_ == other.p_; }

private:
  Scalar p_;
};

/// Dense row-major matrix over F_p. Sizes here stay tiny (relation spaces in
/// dimension d^2 with d around 10), so no effort is spent on sparsity.
class FpMatrix {
public:
  FpMatrix(Fp field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMatrix identity(Fp field, std::size_t n);
  static FpMatrix from_rows(Fp field, const std::vector<FpVector>& rows,
                            std::size_t cols);

  const Fp& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  FpVector row(std::size_t r) const;

  bool operator==(const FpMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && a_ == other.a_;
  }

private:
  Fp field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  FpMatrix rref;
  std::size_t rank;
  std::vector<FpVector> kernel; // basis of the right null space
};

/// Reduced row echelon form together with rank and a kernel basis.
/// rank + |kernel| = cols always; empty matrices are fine.
RrefResult rref_with_kernel(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Basis of { alpha | alpha . v = 0 for every v in basis } under the
/// standard dot pairing, returned in canonical (rref) form.
std::vector<FpVector> annihilator(const std::vector<FpVector>& basis,
                                  std::size_t ambient_dim, Fp field);

/// Canonical form of the row space spanned by `vectors`: rref rows with zero
/// rows dropped. Two spanning sets describe the same subspace iff their
/// canonical forms are equal.
std::vector<FpVector> row_space_canonical(const std::vector<FpVector>& vectors,
                                          std::size_t ambient_dim, Fp field);

/// Incremental row-echelon rank/span accumulator. Rows are kept reduced and
/// sorted by pivot column; insert() reports whether the row enlarged the
/// span. Entries are uint16 so the elimination loop can defer the modular
/// reduction (sums stay below 2^16 for the small primes used here).
class EchelonAccumulator {
public:
  EchelonAccumulator(Fp field, std::size_t len);

  /// Reduce `row` against the current span; if a nonzero remainder is left,
  /// normalize and keep it. Returns true when rank increased.
  bool insert(std::vector<std::uint16_t> row);
  bool insert(const FpVector& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return len_; }
  const Fp& field() const { return field_; }

  /// Current echelon rows, reduced mod p, ordered by pivot column.
  std::vector<FpVector> rows() const;

private:
  Fp field_;
  std::size_t len_;
  std::size_t safe_adds_; // eliminations before a uint16 row must be reduced
  std::vector<std::vector<std::uint16_t>> rows_;
  std::vector<std::size_t> pivot_;
};

} // namespace kf
