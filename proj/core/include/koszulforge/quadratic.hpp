#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "koszulforge/ncpoly.hpp"

namespace kf {

enum class CombineKind { DirectSum, FreeProduct, SymmetricTensor, WedgeProduct };

std::string to_string(CombineKind kind);

/// Quadratic algebra Q(V, Omega): p, d = dim V, and the canonical (rref)
/// basis of the relation subspace Omega inside V⊗V. Degree-2 coordinates are
/// indexed by ordered pairs (i,j) -> X_i X_j, row-major: (i-1)*d + (j-1).
///
/// Equality means equality of canonical relation subspaces under the fixed
/// generator identification; that is the notion of isomorphism used by every
/// identity this library asserts.
class QuadraticAlgebra {
public:
  struct Provenance {
    CombineKind kind;
    std::shared_ptr<const QuadraticAlgebra> left, right;
  };

  /// Rejects relators that are not homogeneous of degree exactly 2, and a
  /// zero generator space with nonempty relators.
  static QuadraticAlgebra from_relators(Fp field, std::uint32_t dim,
                                        const std::vector<NcPoly>& relators);

  /// Omega given directly as spanning vectors in the pair coordinates.
  static QuadraticAlgebra from_omega(Fp field, std::uint32_t dim,
                                     const std::vector<FpVector>& spanning);

  const Fp& field() const { return field_; }
  std::uint32_t dim_v() const { return dim_; }
  std::size_t r() const { return omega_.size(); }
  const std::vector<FpVector>& omega() const { return omega_; }

  /// Omega rows as degree-2 polynomials (the presentation fed to rewriting).
  std::vector<NcPoly> relators() const;

  /// Q(V*, Omega^perp) under the dual-basis pairing
  /// <e*_i ⊗ e*_j, e_k ⊗ e_l> = delta_ik delta_jl.
  QuadraticAlgebra dual() const;

  const std::shared_ptr<const Provenance>& provenance() const {
    return provenance_;
  }

  bool operator==(const QuadraticAlgebra& other) const {
    return field_ == other.field_ && dim_ == other.dim_ &&
           omega_ == other.omega_;
  }

  static std::size_t pair_index(std::uint32_t i, std::uint32_t j,
                                std::uint32_t dim) {
    return std::size_t(i - 1) * dim + (j - 1);
  }

private:
  QuadraticAlgebra(Fp field, std::uint32_t dim) : field_(field), dim_(dim) {}

  Fp field_;
  std::uint32_t dim_;
  std::vector<FpVector> omega_;
  std::shared_ptr<const Provenance> provenance_;

  friend QuadraticAlgebra combine(const QuadraticAlgebra&,
                                  const QuadraticAlgebra&, CombineKind);
};

/// Degree-2 homogeneous polynomial <-> pair-coordinate vector.
FpVector poly_to_pair_vector(const NcPoly& f, std::uint32_t dim);
NcPoly pair_vector_to_poly(const FpVector& v, Fp field, std::uint32_t dim);

/// The four binary constructions. Generators of `a` come first; mixed
/// relations are enumerated with the A-block factor on the left.
QuadraticAlgebra combine(const QuadraticAlgebra& a, const QuadraticAlgebra& b,
                         CombineKind kind);

/// dim A_n, via bounded-degree completion and normal-word counting.
std::int64_t component_dim(const QuadraticAlgebra& a, int n);

/// k(A) = max{ n | A_n != 0 }, decided up to nmax.
struct KBound {
  bool bounded;   // false: every component up to nmax was nonzero
  int value;      // k(A) when bounded, otherwise nmax
};
KBound k_of(const QuadraticAlgebra& a, int nmax);

/// One-relator Demushkin quadratic algebras. Variant a needs d even;
/// b (d even) and c (d odd) need p = 2. Auto picks a for odd p and b/c by
/// parity for p = 2.
enum class DemushkinVariant { Auto, A, B, C };
NcPoly demushkin_relator(Fp field, std::uint32_t dim, DemushkinVariant v);
QuadraticAlgebra demushkin_algebra(Fp field, std::uint32_t dim,
                                   DemushkinVariant v = DemushkinVariant::Auto);

} // namespace kf
