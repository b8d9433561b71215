#include "koszulforge/group.hpp"

#include <cctype>
#include <sstream>

namespace kf {

GroupWord GroupWord::generator(std::uint32_t gen, std::int64_t exp) {
  GroupWord w;
  if (gen < 1) throw ValidationError("generator indices are 1-based");
  if (exp != 0) w.factors_.push_back(GroupFactor{gen, exp});
  return w;
}

GroupWord GroupWord::from_factors(const std::vector<GroupFactor>& factors) {
  GroupWord w;
  for (const GroupFactor& f : factors) {
    if (f.gen < 1) throw ValidationError("generator indices are 1-based");
    if (f.exp == 0) continue;
    if (!w.factors_.empty() && w.factors_.back().gen == f.gen) {
      w.factors_.back().exp += f.exp;
      if (w.factors_.back().exp == 0) w.factors_.pop_back();
    } else {
      w.factors_.push_back(f);
    }
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  std::vector<GroupFactor> rev;
  rev.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    rev.push_back(GroupFactor{it->gen, -it->exp});
  return from_factors(rev);
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
  std::vector<GroupFactor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_factors(all);
}

GroupWord GroupWord::pow(std::int64_t e) const {
  if (factors_.size() == 1) {
    // avoid quadratic blowup for single-generator powers
    return generator(factors_[0].gen, factors_[0].exp * e);
  }
  GroupWord base = e < 0 ? inverse() : *this;
  std::int64_t k = e < 0 ? -e : e;
  GroupWord acc;
  while (k-- > 0) acc = acc * base;
  return acc;
}

GroupWord GroupWord::commutator(const GroupWord& u, const GroupWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

std::uint32_t GroupWord::max_index() const {
  std::uint32_t m = 0;
  for (const GroupFactor& f : factors_) m = std::max(m, f.gen);
  return m;
}

std::string to_string(const GroupWord& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const GroupFactor& f : w.factors()) {
    if (!first) os << "*";
    first = false;
    os << "x" << f.gen;
    if (f.exp != 1) os << "^" << f.exp;
  }
  return os.str();
}

namespace {

struct GroupWordParser {
  const std::string& s;
  std::size_t pos = 0;
  std::uint32_t ngens;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("relator parse error at offset " +
                          std::to_string(pos) + ": " + what);
  }

  std::int64_t parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000'000LL) fail("exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  GroupWord parse_factor() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    GroupWord base;
    if (s[pos] == '(') {
      ++pos;
      base = parse_word();
      if (!eat(')')) fail("expected ')'");
    } else if (s[pos] == '[') {
      ++pos;
      GroupWord u = parse_word();
      if (!eat(',')) fail("expected ',' in commutator");
      GroupWord v = parse_word();
      if (!eat(']')) fail("expected ']'");
      base = GroupWord::commutator(u, v);
    } else if (s[pos] == 'x' || s[pos] == 'X') {
      ++pos;
      const std::int64_t idx = parse_int();
      if (idx < 1 || std::uint64_t(idx) > ngens)
        fail("generator index " + std::to_string(idx) + " out of range");
      base = GroupWord::generator(std::uint32_t(idx));
    } else if (s[pos] == '1') {
      ++pos;
      base = GroupWord();
    } else {
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      base = base.pow(parse_int());
    }
    return base;
  }

  GroupWord parse_word() {
    GroupWord w = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        w = w * parse_factor();
        continue;
      }
      if (pos < s.size() &&
          (s[pos] == '(' || s[pos] == '[' || s[pos] == 'x' || s[pos] == 'X' ||
           s[pos] == '1')) {
        w = w * parse_factor();
        continue;
      }
      break;
    }
    return w;
  }
};

} // namespace

GroupWord parse_group_word(const std::string& text, std::uint32_t ngens) {
  GroupWordParser p{text, 0, ngens};
  GroupWord w = p.parse_word();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

GroupPresentation::GroupPresentation(Fp f, std::uint32_t d,
                                     std::vector<GroupWord> rels)
    : field(f), ngens(d), relators(std::move(rels)) {
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].is_identity())
      throw ValidationError("relator " + std::to_string(i + 1) +
                            " reduces to the identity");
    if (relators[i].max_index() > ngens)
      throw ValidationError("relator " + std::to_string(i + 1) +
                            " uses a generator beyond d=" + std::to_string(d));
  }
}

int default_dmax(Fp field) { return std::max<int>(int(field.p()), 4); }

namespace {

// (1 + X_g)^e truncated; negative exponents go through the geometric series
// for the inverse.
NcPoly binomial_power(std::uint32_t gen, std::int64_t e, Fp field,
                      std::uint32_t ngens, int trunc) {
  NcPoly base(field, ngens);
  base.add_term(Word{}, 1);
  if (e == 0) return base;
  if (e > 0) {
    base.add_term(Word{gen}, 1);
  } else {
    Scalar c = 1;
    Word w;
    for (int k = 1; k <= trunc; ++k) {
      w.push_back(gen);
      c = field.neg(c);
      base.add_term(w, c);
    }
    e = -e;
  }
  NcPoly acc = NcPoly::one(field, ngens);
  std::uint64_t k = std::uint64_t(e);
  NcPoly sq = base;
  while (k) {
    if (k & 1) acc = multiply(acc, sq, trunc);
    k >>= 1;
    if (k) sq = multiply(sq, sq, trunc);
  }
  return acc;
}

} // namespace

MagnusSeries magnus_expand(const GroupWord& w, Fp field, std::uint32_t ngens,
                           int trunc) {
  if (trunc < 1) throw ValidationError("Magnus truncation must be >= 1");
  if (w.max_index() > ngens)
    throw ValidationError("word uses a generator beyond d=" +
                          std::to_string(ngens));
  NcPoly acc = NcPoly::one(field, ngens);
  for (const GroupFactor& f : w.factors())
    acc = multiply(acc, binomial_power(f.gen, f.exp, field, ngens, trunc),
                   trunc);
  return MagnusSeries{std::move(acc), trunc};
}

InitialForm initial_form(const GroupWord& r, Fp field, std::uint32_t ngens,
                         int dmax) {
  if (r.is_identity())
    throw ValidationError("the identity word has no initial form");
  for (int depth : {dmax, 2 * dmax}) {
    const MagnusSeries m = magnus_expand(r, field, ngens, depth);
    NcPoly f = m.poly;
    f.add_term(Word{}, field.neg(1)); // psi(r) - 1
    for (int n = 1; n <= depth; ++n) {
      NcPoly comp = f.homogeneous_component(n);
      if (!comp.is_zero()) return InitialForm{std::move(comp), n};
    }
  }
  throw BudgetError("weight of relator " + to_string(r) + " exceeds Dmax=" +
                    std::to_string(dmax) + " (raised once to " +
                    std::to_string(2 * dmax) + "); raise Dmax");
}

MinimalityResult minimality_check(const GroupPresentation& g, int dmax) {
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    const InitialForm f = initial_form(g.relators[i], g.field, g.ngens, dmax);
    if (f.weight < 2) return {false, i, f.weight};
  }
  return {true, 0, 0};
}

GrPresentation gr_presentation(const GroupPresentation& g, int dmax) {
  const MinimalityResult min = minimality_check(g, dmax);
  if (!min.ok)
    throw ValidationError("presentation is not minimal: relator " +
                          std::to_string(min.violating_relator + 1) +
                          " has weight " + std::to_string(min.weight));
  GrPresentation out{g.field, g.ngens, {}, {}};
  for (const GroupWord& r : g.relators) {
    InitialForm f = initial_form(r, g.field, g.ngens, dmax);
    out.relators.push_back(std::move(f.form));
    out.weights.push_back(f.weight);
  }
  return out;
}

std::string to_string(Flag3 f) {
  switch (f) {
    case Flag3::Yes: return "yes";
    case Flag3::No: return "no";
    case Flag3::Unknown: return "unknown";
  }
  return "?";
}

CohomologyDims cohomology_dims(const GroupPresentation& g, int dmax) {
  const GrPresentation gr = gr_presentation(g, dmax);
  bool all_quadratic = true;
  for (int w : gr.weights)
    if (w != 2) all_quadratic = false;
  if (!all_quadratic)
    return {g.ngens, std::int64_t(g.relators.size()), Flag3::Unknown};
  std::vector<FpVector> rows;
  rows.reserve(gr.relators.size());
  for (const NcPoly& f : gr.relators)
    rows.push_back(poly_to_pair_vector(f, g.ngens));
  const std::size_t rank =
      row_space_canonical(rows, std::size_t(g.ngens) * g.ngens, g.field).size();
  return {g.ngens, std::int64_t(rank),
          rank == g.relators.size() ? Flag3::Yes : Flag3::No};
}

MildnessResult mildness_check(const GroupPresentation& g,
                              const MonomialOrder& ord, int dmax, int nmax) {
  const MinimalityResult min = minimality_check(g, dmax);
  if (!min.ok)
    throw ValidationError("mildness requires a minimal presentation");
  const GrPresentation gr = gr_presentation(g, dmax);
  MildnessResult res;
  res.detail = strongly_free_check(gr.relators, ord, g.field, g.ngens, nmax);
  res.status = res.detail.status;
  res.degree = res.detail.degree;
  res.notes.push_back(
      "verdict is relative to the chosen generator order; a refutation "
      "concerns this initial-form sequence only");
  if (g.field.p() == 2 && g.relators.size() == 1)
    res.notes.push_back(
        "p = 2, one relator: the blanket one-relator mildness statement "
        "assumes p odd; this verdict rests on the strong-freeness check "
        "alone");
  return res;
}

QuadraticityReport quadraticity_conditions(const GroupPresentation& g,
                                           const MonomialOrder& ord, int dmax,
                                           int nmax) {
  const MildnessResult mild = mildness_check(g, ord, dmax, nmax);
  if (mild.status != CheckStatus::Certified)
    throw ValidationError(
        "quadraticity conditions require a certified mild presentation");
  const GrPresentation gr = gr_presentation(g, dmax);
  QuadraticityReport rep;

  bool all_quadratic = true;
  for (int w : gr.weights)
    if (w != 2) all_quadratic = false;
  if (!all_quadratic) {
    rep.condition_a = false;
    rep.condition_b = Flag3::Unknown;
    rep.notes.push_back(
        "a relator has weight > 2; the quadratic machinery is disabled");
    return rep;
  }

  std::vector<FpVector> rows;
  for (const NcPoly& f : gr.relators)
    rows.push_back(poly_to_pair_vector(f, g.ngens));
  const std::size_t rank =
      row_space_canonical(rows, std::size_t(g.ngens) * g.ngens, g.field).size();
  rep.condition_a = rank == gr.relators.size();
  if (!rep.condition_a)
    rep.notes.push_back("initial forms are linearly dependent");

  const QuadraticAlgebra gr_alg =
      QuadraticAlgebra::from_relators(g.field, g.ngens, gr.relators);
  const std::int64_t dual3 = component_dim(gr_alg.dual(), 3);
  rep.condition_b = dual3 == 0 ? Flag3::Yes : Flag3::No;
  if (rep.condition_b == Flag3::No)
    rep.notes.push_back("(gr^!)_3 has dimension " + std::to_string(dual3));
  return rep;
}

AnalysisReport analyze(const GroupPresentation& g, const MonomialOrder& ord,
                       int dmax, int nmax, int budget, std::uint64_t seed) {
  AnalysisReport rep;
  rep.ngens = g.ngens;
  rep.relator_count = g.relators.size();

  MinimalityResult min{false, 0, 0};
  try {
    min = minimality_check(g, dmax);
  } catch (const BudgetError& e) {
    rep.budget_exceeded = true;
    rep.warnings.push_back(e.what());
    return rep;
  }
  rep.minimal = min.ok;
  if (!min.ok) {
    rep.violating_relator = min.violating_relator;
    rep.warnings.push_back("relator " +
                           std::to_string(min.violating_relator + 1) +
                           " has weight " + std::to_string(min.weight) +
                           " < 2; presentation is not minimal");
    return rep;
  }

  const GrPresentation gr = gr_presentation(g, dmax);
  rep.weights = gr.weights;
  rep.gr_relators = gr.relators;
  rep.dims = cohomology_dims(g, dmax);

  MildnessResult mild = mildness_check(g, ord, dmax, nmax);
  rep.mildness = mild;
  if (mild.status != CheckStatus::Certified)
    rep.warnings.push_back(
        "gr F_p[[G]] is presented by the initial forms only when the "
        "presentation is strongly free; mildness is " +
        to_string(mild.status));
  if (g.field.p() == 2 && g.relators.size() == 1)
    rep.warnings.push_back("p = 2 one-relator caveat: see mildness notes");

  bool all_quadratic = true;
  for (int w : gr.weights)
    if (w != 2) all_quadratic = false;

  if (all_quadratic) {
    rep.gr_algebra =
        QuadraticAlgebra::from_relators(g.field, g.ngens, gr.relators);
    rep.h_candidate = rep.gr_algebra->dual();
    try {
      rep.gr_series = hilbert_coeffs(gr.relators, ord, g.field, g.ngens, nmax);
    } catch (const BudgetError& e) {
      rep.budget_exceeded = true;
      rep.warnings.push_back(e.what());
    }
    if (mild.status == CheckStatus::Certified)
      rep.quadraticity = quadraticity_conditions(g, ord, dmax, nmax);
    rep.gr_verdict = koszul_verdict(*rep.gr_algebra, nmax, budget, seed);
    rep.h_verdict = koszul_verdict(*rep.h_candidate, nmax, budget, seed);
    try {
      rep.pair_identity = series_identity_check(*rep.gr_algebra, nmax);
    } catch (const BudgetError& e) {
      rep.budget_exceeded = true;
      rep.warnings.push_back(e.what());
    }
  } else {
    rep.warnings.push_back(
        "a relator has weight > 2: H-candidate and Koszul verdicts need "
        "quadratic initial forms and were skipped");
  }

  rep.duality_conclusion = mild.status == CheckStatus::Certified &&
                           rep.quadraticity && rep.quadraticity->condition_a &&
                           rep.quadraticity->condition_b == Flag3::Yes;
  return rep;
}

GroupPresentation demushkin_presentation(Fp field, std::uint32_t ngens,
                                         DemushkinVariant v) {
  if (v == DemushkinVariant::Auto) {
    if (field.p() != 2) v = DemushkinVariant::A;
    else v = (ngens % 2 == 0) ? DemushkinVariant::B : DemushkinVariant::C;
  }
  GroupWord r;
  auto comm = [](std::uint32_t i, std::uint32_t j) {
    return GroupWord::commutator(GroupWord::generator(i),
                                 GroupWord::generator(j));
  };
  switch (v) {
    case DemushkinVariant::A:
      if (ngens % 2 != 0 || ngens < 2)
        throw ValidationError("variant (a) needs an even number of generators");
      for (std::uint32_t k = 1; k + 1 <= ngens; k += 2) r = r * comm(k, k + 1);
      break;
    case DemushkinVariant::B:
      if (field.p() != 2) throw ValidationError("variant (b) is a p=2 family");
      if (ngens % 2 != 0 || ngens < 2)
        throw ValidationError("variant (b) needs an even number of generators");
      r = GroupWord::generator(1, 2);
      for (std::uint32_t k = 1; k + 1 <= ngens; k += 2) r = r * comm(k, k + 1);
      break;
    case DemushkinVariant::C:
      if (field.p() != 2) throw ValidationError("variant (c) is a p=2 family");
      if (ngens % 2 != 1)
        throw ValidationError("variant (c) needs an odd number of generators");
      r = GroupWord::generator(1, 2);
      for (std::uint32_t k = 2; k + 1 <= ngens; k += 2) r = r * comm(k, k + 1);
      break;
    case DemushkinVariant::Auto:
      break;
  }
  return GroupPresentation(field, ngens, {r});
}

} // namespace kf
