#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulforge/koszul.hpp"
#include "koszulforge/ncpoly.hpp"
#include "koszulforge/quadratic.hpp"

namespace kf {

struct GroupFactor {
  std::uint32_t gen;
  std::int64_t exp; // never zero after normalization

  bool operator==(const GroupFactor&) const = default;
};

/// Freely reduced word in a free (pro-p) group: adjacent factors with the
/// same generator are merged and zero exponents removed, cascading.
class GroupWord {
public:
  GroupWord() = default;
  static GroupWord generator(std::uint32_t gen, std::int64_t exp = 1);
  static GroupWord from_factors(const std::vector<GroupFactor>& factors);
  /// [u, v] = u^{-1} v^{-1} u v.
  static GroupWord commutator(const GroupWord& u, const GroupWord& v);

  bool is_identity() const { return factors_.empty(); }
  const std::vector<GroupFactor>& factors() const { return factors_; }
  std::uint32_t max_index() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& other) const;
  GroupWord pow(std::int64_t e) const;

  bool operator==(const GroupWord& other) const {
    return factors_ == other.factors_;
  }

private:
  std::vector<GroupFactor> factors_;
};

std::string to_string(const GroupWord& w);

/// Relator syntax: products of x<k>^e factors and commutators [u,v], e.g.
/// "[x1,x2]*x3^-2" or "[x1,[x1,x2]]". '*' between factors is optional.
GroupWord parse_group_word(const std::string& text, std::uint32_t ngens);

/// Finitely generated pro-p presentation. Identity relators are rejected;
/// minimality (all relators of weight >= 2) is checked separately.
struct GroupPresentation {
  Fp field;
  std::uint32_t ngens;
  std::vector<GroupWord> relators;

  GroupPresentation(Fp f, std::uint32_t d, std::vector<GroupWord> rels);
};

/// Truncated image under x_i -> 1 + X_i; constant term is always 1.
struct MagnusSeries {
  NcPoly poly;
  int trunc;
};

MagnusSeries magnus_expand(const GroupWord& w, Fp field, std::uint32_t ngens,
                           int trunc);

/// Default expansion depth: max(p, 4).
int default_dmax(Fp field);

struct InitialForm {
  NcPoly form; // lowest nonzero homogeneous component of psi(r) - 1
  int weight;  // its degree = the Zassenhaus level of r
};

/// Raises the depth once automatically before giving up with a BudgetError
/// ("weight exceeds Dmax").
InitialForm initial_form(const GroupWord& r, Fp field, std::uint32_t ngens,
                         int dmax);

struct MinimalityResult {
  bool ok;
  std::size_t violating_relator = 0; // index when !ok
  int weight = 0;                    // the offending weight
};

MinimalityResult minimality_check(const GroupPresentation& g, int dmax);

/// The graded-algebra presentation of gr F_p[[G]] on the same generators:
/// relators are the initial forms. Valid as stated for mild presentations.
struct GrPresentation {
  Fp field;
  std::uint32_t ngens;
  std::vector<NcPoly> relators;
  std::vector<int> weights;
};

GrPresentation gr_presentation(const GroupPresentation& g, int dmax);

enum class Flag3 { Yes, No, Unknown };
std::string to_string(Flag3 f);

struct CohomologyDims {
  std::uint32_t h1;
  std::int64_t h2;
  Flag3 independent;
};

/// dim H^1 = generator count; dim H^2 = rank of the degree-2 initial forms
/// when all weights are 2, else the relator count with independence unknown.
CohomologyDims cohomology_dims(const GroupPresentation& g, int dmax);

struct MildnessResult {
  CheckStatus status;
  int degree = 0;
  StronglyFreeResult detail{CheckStatus::ConsistentUpTo};
  std::vector<std::string> notes;
};

/// Strong freeness of the initial forms under the given order. The verdict
/// is order-relative; Refuted speaks about this sequence only.
MildnessResult mildness_check(const GroupPresentation& g,
                              const MonomialOrder& ord, int dmax, int nmax);

struct QuadraticityReport {
  bool condition_a = false; // quadratic, linearly independent initial forms
  Flag3 condition_b = Flag3::Unknown; // (gr^!)_3 = 0
  std::vector<std::string> notes;
};

/// The two cohomology-quadraticity conditions; requires a certified mild
/// presentation.
QuadraticityReport quadraticity_conditions(const GroupPresentation& g,
                                           const MonomialOrder& ord, int dmax,
                                           int nmax);

/// Full pipeline report: minimality, H^1/H^2, mildness, quadraticity, the
/// dual pair gr F_p[[G]] / H-candidate with Koszul verdicts and the series
/// identity between them. Failures downgrade to partial reports.
struct AnalysisReport {
  std::uint32_t ngens = 0;
  std::size_t relator_count = 0;
  bool minimal = false;
  std::optional<std::size_t> violating_relator;
  std::optional<CohomologyDims> dims;
  std::vector<int> weights;
  std::vector<NcPoly> gr_relators;
  std::optional<MildnessResult> mildness;
  std::optional<QuadraticityReport> quadraticity;
  std::optional<QuadraticAlgebra> gr_algebra;
  std::optional<QuadraticAlgebra> h_candidate;
  std::optional<KoszulVerdict> gr_verdict;
  std::optional<KoszulVerdict> h_verdict;
  std::optional<SeriesIdentityResult> pair_identity;
  std::vector<std::int64_t> gr_series;
  bool duality_conclusion = false; // certified mild + quadratic cohomology
  bool budget_exceeded = false;
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const GroupPresentation& g, const MonomialOrder& ord,
                       int dmax, int nmax, int budget, std::uint64_t seed = 0);

/// One-relator Demushkin presentations matching the algebra family: variant
/// a is the product of commutators, b/c prepend the square of x1 (p = 2).
GroupPresentation demushkin_presentation(Fp field, std::uint32_t ngens,
                                         DemushkinVariant v = DemushkinVariant::Auto);

} // namespace kf
