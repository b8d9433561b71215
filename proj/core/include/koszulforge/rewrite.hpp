#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulforge/ncpoly.hpp"

namespace kf {

/// One reduction rule: monic leading word -> strictly ≺-smaller tail of the
/// same degree (everything here is graded). lead never occurs in the tail.
struct RewriteRule {
  Word lead;
  NcPoly tail;
};

/// A monomial order plus interreduced rules, stamped with the degree up to
/// which every S-polynomial overlap is known to reduce to zero.
struct RewriteSystem {
  Fp field;
  std::uint32_t ngens;
  MonomialOrder ord;
  std::vector<RewriteRule> rules;
  int complete_up_to = 0;

  RewriteSystem(Fp f, std::uint32_t d, MonomialOrder o)
      : field(f), ngens(d), ord(std::move(o)) {}
};

/// Rewrite f until no word contains a rule's lead as a subword. Canonical
/// when deg(f) <= complete_up_to; otherwise still a valid reduction modulo
/// the ideal, just not certified unique.
NcPoly normal_form(const NcPoly& f, const RewriteSystem& sys);

struct CompletionResult {
  RewriteSystem system;
  /// True when input relators beyond the degree budget had to be dropped;
  /// complete_up_to is lowered accordingly and notes say what happened.
  bool budget_exhausted = false;
  std::vector<std::string> notes;
};

/// Bounded-degree noncommutative Buchberger completion: interreduce, then
/// resolve every overlap of total degree <= nmax, appending new rules from
/// nonzero residues. Relators must be homogeneous of degree >= 2.
CompletionResult complete(const std::vector<NcPoly>& relators,
                          const MonomialOrder& ord, Fp field,
                          std::uint32_t ngens, int nmax);

/// True iff all rules are quadratic and every degree-3 overlap reduces to
/// zero: a quadratic Groebner basis, hence a Koszulity certificate.
/// Requires complete_up_to >= 3.
bool pbw_certificate(const RewriteSystem& sys);

/// Number of normal words per degree 0..nmax. With quadratic leads this uses
/// the forbidden-pair transfer matrix; otherwise words are enumerated.
std::vector<std::int64_t> normal_word_counts(const RewriteSystem& sys, int nmax);

/// dim A_n for n = 0..nmax of the quotient by the given homogeneous relators.
std::vector<std::int64_t> hilbert_coeffs(const std::vector<NcPoly>& relators,
                                         const MonomialOrder& ord, Fp field,
                                         std::uint32_t ngens, int nmax);

/// Normal words, listed per degree 0..nmax.
std::vector<std::vector<Word>> normal_word_basis(const RewriteSystem& sys,
                                                 int nmax);

struct CombinatorialWitness {
  std::size_t i, j;
  std::string reason;
};

struct CombinatorialResult {
  bool free;
  std::optional<CombinatorialWitness> witness;
};

/// Anick's combinatorial freeness: no word is a subword of another, and no
/// proper nonempty suffix of any word equals a proper nonempty prefix of any
/// (possibly the same) word.
CombinatorialResult combinatorially_free(const std::vector<Word>& leads);

} // namespace kf
