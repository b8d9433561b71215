#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulforge/quadratic.hpp"
#include "koszulforge/rewrite.hpp"

namespace kf {

enum class CheckStatus { Certified, ConsistentUpTo, Refuted };
std::string to_string(CheckStatus s);

enum class CertificateKind {
  None,
  PBW,
  ExtremalSeries,
  UWDecomposition,
  ClosureOperation
};
std::string to_string(CertificateKind c);

enum class RefutationKind { None, SeriesIdentityFailure, OffDiagonalExt };
std::string to_string(RefutationKind r);

/// Aggregated Koszulity answer. Bounded-degree semantics: Certified carries a
/// certificate, Refuted carries a witness, and anything else is reported
/// honestly as consistent-up-to-nmax.
struct KoszulVerdict {
  CheckStatus status = CheckStatus::ConsistentUpTo;
  int up_to = 0;
  CertificateKind certificate = CertificateKind::None;
  RefutationKind refutation = RefutationKind::None;
  int refutation_degree = -1; // series-identity failure degree
  int ext_i = -1, ext_j = -1; // off-diagonal Ext witness
  std::vector<std::string> notes;
};

/// Bigraded Ext dimension table dims[i][j], 0 <= i <= imax, 0 <= j <= jmax.
struct ExtTable {
  int imax = 0, jmax = 0;
  std::vector<std::vector<std::int64_t>> dims;

  std::int64_t at(int i, int j) const { return dims[std::size_t(i)][std::size_t(j)]; }
  /// First (i, j) with i != j and dims nonzero, scanning by j then i.
  std::optional<std::pair<int, int>> first_off_diagonal() const;
};

/// Coefficients of 1 / (1 - d z + z^{s_1} + ... + z^{s_m}) up to nmax.
std::vector<std::int64_t> extremal_series(std::uint32_t d,
                                          const std::vector<int>& degrees,
                                          int nmax);

struct StronglyFreeResult {
  CheckStatus status;
  int degree = 0; // first deviation (Refuted) or the bound (ConsistentUpTo)
  enum class Route { None, CombinatoriallyFree, RationalSeries } route =
      Route::None;
  std::vector<std::string> notes;
};

/// Does the quotient by these homogeneous relators attain the extremal
/// series? Certified via Anick's combinatorial freeness of the leading
/// monomials, or via an exact rational-function match when completion yields
/// a finite quadratic Groebner basis.
StronglyFreeResult strongly_free_check(const std::vector<NcPoly>& relators,
                                       const MonomialOrder& ord, Fp field,
                                       std::uint32_t d, int nmax);

struct ExtremalSeriesResult {
  CheckStatus status;
  int degree = 0;
  std::vector<std::string> notes;
};

/// Compare h_A against (1 - d z + r z^2)^{-1}. A mismatch refutes the
/// extremal property only (recorded in notes); an exact rational match with a
/// quadratic Groebner basis certifies Koszulity.
ExtremalSeriesResult extremal_series_koszul(const QuadraticAlgebra& a,
                                            int nmax);

struct SeriesIdentityResult {
  bool holds;
  int degree; // the bound when holds, else the first failure degree
};

/// h_A(z) * h_{A^!}(-z) = 1, checked coefficientwise to nmax. A failure is a
/// certified Koszulity refutation.
SeriesIdentityResult series_identity_check(const QuadraticAlgebra& a, int nmax);

struct UwCheckResult {
  bool certified;
  std::string failed_condition; // "i" or "ii" when not certified
};

/// Cup-product style criterion: with A_1 = U ⊕ W, (i) U·W spans A_2 and
/// (ii) U·U = 0 certify Koszulity; the certified path also verifies A_3 = 0.
UwCheckResult uw_check(const QuadraticAlgebra& a,
                       const std::vector<FpVector>& u_basis,
                       const std::vector<FpVector>& w_basis);

struct UwDecomposition {
  std::vector<FpVector> u_basis, w_basis;
};

/// Coordinate-subset splits first, then up to `budget` seeded random basis
/// changes. Returning nothing is not a refutation.
std::optional<UwDecomposition> uw_search(const QuadraticAlgebra& a, int budget,
                                         std::uint64_t seed = 0);

/// Bigraded Ext dims of the trivial module, read off a degreewise minimal
/// free resolution over the normal-word basis.
ExtTable ext_table(const QuadraticAlgebra& a, int imax, int jmax);

/// Certificate hierarchy: PBW, extremal series, U⊕W search, closure
/// provenance; then refutations (series identity, off-diagonal Ext); else
/// consistent-up-to.
KoszulVerdict koszul_verdict(const QuadraticAlgebra& a, int nmax, int budget,
                             std::uint64_t seed = 0);

} // namespace kf
