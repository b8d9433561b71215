#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "koszulforge/fp.hpp"
#include "koszulforge/word.hpp"

namespace kf {

/// Noncommutative polynomial over F_p<X1,...,Xd>: a finite map from words to
/// nonzero coefficients. Immutable in spirit; the mutating helpers are for
/// construction only.
class NcPoly {
public:
  NcPoly(Fp field, std::uint32_t ngens) : field_(field), ngens_(ngens) {}

  static NcPoly zero(Fp field, std::uint32_t ngens) { return NcPoly(field, ngens); }
  static NcPoly one(Fp field, std::uint32_t ngens);
  static NcPoly gen(Fp field, std::uint32_t ngens, std::uint32_t i);
  static NcPoly monomial(Fp field, std::uint32_t ngens, Word w, Scalar c = 1);

  const Fp& field() const { return field_; }
  std::uint32_t ngens() const { return ngens_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;

  /// Adds c*w, folding into an existing term and dropping zeros.
  void add_term(const Word& w, Scalar c);

  NcPoly operator+(const NcPoly& g) const;
  NcPoly operator-(const NcPoly& g) const;
  NcPoly operator-() const;
  NcPoly scaled(Scalar c) const;

  bool operator==(const NcPoly& g) const {
    return field_ == g.field_ && ngens_ == g.ngens_ && terms_ == g.terms_;
  }

  /// -1 for the zero polynomial.
  int degree() const;
  bool homogeneous() const;
  NcPoly homogeneous_component(int n) const;

private:
  Fp field_;
  std::uint32_t ngens_;
  std::map<Word, Scalar> terms_;
};

/// Concatenation product; terms of degree > trunc are discarded when trunc
/// is given (the Magnus machinery relies on that).
NcPoly multiply(const NcPoly& f, const NcPoly& g,
                std::optional<int> trunc = std::nullopt);

/// [X_i, X_j] = X_i X_j - X_j X_i; i == j gives the zero polynomial.
NcPoly commutator_poly(std::uint32_t i, std::uint32_t j, Fp field,
                       std::uint32_t ngens);

/// The ≺-maximal term of a nonzero polynomial.
std::pair<Word, Scalar> leading_monomial(const NcPoly& f,
                                         const MonomialOrder& ord);

/// Textual form, e.g. "2*X1*X2 + X3^2". The zero polynomial prints as "0".
std::string to_string(const NcPoly& f);
std::string to_string(const Word& w);

/// Parser for the same syntax, plus parentheses and the commutator shorthand
/// [f,g] = f*g - g*f. Indices must lie in [1, ngens].
NcPoly parse_poly(const std::string& text, Fp field, std::uint32_t ngens);

} // namespace kf
