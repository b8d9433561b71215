#include "koszulforge/ncpoly.hpp"

#include <cctype>
#include <sstream>

namespace kf {

NcPoly NcPoly::one(Fp field, std::uint32_t ngens) {
  NcPoly f(field, ngens);
  f.add_term(Word{}, 1);
  return f;
}

NcPoly NcPoly::gen(Fp field, std::uint32_t ngens, std::uint32_t i) {
  if (i < 1 || i > ngens)
    throw ValidationError("generator index " + std::to_string(i) +
                          " out of range [1, " + std::to_string(ngens) + "]");
  NcPoly f(field, ngens);
  f.add_term(Word{i}, 1);
  return f;
}

NcPoly NcPoly::monomial(Fp field, std::uint32_t ngens, Word w, Scalar c) {
  for (std::uint32_t g : w)
    if (g < 1 || g > ngens)
      throw ValidationError("generator index " + std::to_string(g) +
                            " out of range [1, " + std::to_string(ngens) + "]");
  NcPoly f(field, ngens);
  f.add_term(std::move(w), c);
  return f;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void NcPoly::add_term(const Word& w, Scalar c) {
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_compatible(const NcPoly& f, const NcPoly& g) {
  if (!(f.field() == g.field()))
    throw ValidationError("modulus mismatch between polynomials");
  if (f.ngens() != g.ngens())
    throw ValidationError("generator-count mismatch between polynomials");
}

} // namespace

NcPoly NcPoly::operator+(const NcPoly& g) const {
  check_compatible(*this, g);
  NcPoly r = *this;
  for (const auto& [w, c] : g.terms_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& g) const {
  check_compatible(*this, g);
  NcPoly r = *this;
  for (const auto& [w, c] : g.terms_) r.add_term(w, field_.neg(c));
  return r;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(field_, ngens_);
  for (const auto& [w, c] : terms_) r.add_term(w, field_.neg(c));
  return r;
}

NcPoly NcPoly::scaled(Scalar c) const {
  NcPoly r(field_, ngens_);
  for (const auto& [w, k] : terms_) r.add_term(w, field_.mul(k, c));
  return r;
}

int NcPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, int(w.size()));
  return d;
}

bool NcPoly::homogeneous() const {
  int d = -1;
  for (const auto& [w, c] : terms_) {
    if (d < 0) d = int(w.size());
    else if (d != int(w.size())) return false;
  }
  return true;
}

NcPoly NcPoly::homogeneous_component(int n) const {
  NcPoly r(field_, ngens_);
  for (const auto& [w, c] : terms_)
    if (int(w.size()) == n) r.add_term(w, c);
  return r;
}

NcPoly multiply(const NcPoly& f, const NcPoly& g, std::optional<int> trunc) {
  if (!(f.field() == g.field()))
    throw ValidationError("modulus mismatch between polynomials");
  if (f.ngens() != g.ngens())
    throw ValidationError("generator-count mismatch between polynomials");
  NcPoly r(f.field(), f.ngens());
  for (const auto& [u, a] : f.terms()) {
    if (trunc && int(u.size()) > *trunc) continue;
    for (const auto& [v, b] : g.terms()) {
      if (trunc && int(u.size() + v.size()) > *trunc) continue;
      r.add_term(concat(u, v), f.field().mul(a, b));
    }
  }
  return r;
}

NcPoly commutator_poly(std::uint32_t i, std::uint32_t j, Fp field,
                       std::uint32_t ngens) {
  NcPoly r(field, ngens);
  if (i < 1 || i > ngens || j < 1 || j > ngens)
    throw ValidationError("commutator index out of range");
  if (i == j) return r; // degenerate, not an error
  r.add_term(Word{i, j}, 1);
  r.add_term(Word{j, i}, field.neg(1));
  return r;
}

std::pair<Word, Scalar> leading_monomial(const NcPoly& f,
                                         const MonomialOrder& ord) {
  if (f.is_zero())
    throw ValidationError("leading monomial of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (i) os << "*";
    os << "X" << w[i];
    if (run > 1) os << "^" << run;
    i += run;
  }
  return os.str();
}

std::string to_string(const NcPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || w.empty()) {
      os << c;
      if (!w.empty()) os << "*";
    }
    if (!w.empty()) os << to_string(w);
  }
  return os.str();
}

namespace {

// Recursive-descent parser for polynomial text:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := uint | ('X'|'x') uint | '(' poly ')' | '[' poly ',' poly ']'
struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  Fp field;
  std::uint32_t ngens;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("polynomial parse error at offset " +
                          std::to_string(pos) + ": " + what);
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + std::uint64_t(s[pos] - '0');
      if (v > 1'000'000'000ULL) fail("number too large");
      ++pos;
    }
    return v;
  }

  NcPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      NcPoly f = parse_poly();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '[') {
      ++pos;
      NcPoly a = parse_poly();
      if (!eat(',')) fail("expected ',' in commutator");
      NcPoly b = parse_poly();
      if (!eat(']')) fail("expected ']'");
      return multiply(a, b) - multiply(b, a);
    }
    if (c == 'X' || c == 'x') {
      ++pos;
      const std::uint64_t idx = parse_uint();
      if (idx < 1 || idx > ngens)
        fail("generator index " + std::to_string(idx) + " out of range");
      return NcPoly::gen(field, ngens, static_cast<std::uint32_t>(idx));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = parse_uint();
      NcPoly f(field, ngens);
      f.add_term(Word{}, static_cast<Scalar>(v % field.p()));
      return f;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NcPoly parse_factor() {
    NcPoly base = parse_atom();
    if (eat('^')) {
      const std::uint64_t e = parse_uint();
      NcPoly r = NcPoly::one(field, ngens);
      for (std::uint64_t k = 0; k < e; ++k) r = multiply(r, base);
      return r;
    }
    return base;
  }

  NcPoly parse_term() {
    NcPoly f = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        f = multiply(f, parse_factor());
        continue;
      }
      // implicit product before '(', '[', 'X' or a digit
      if (pos < s.size() && (s[pos] == '(' || s[pos] == '[' || s[pos] == 'X' ||
                             s[pos] == 'x'))
        f = multiply(f, parse_factor());
      else
        break;
    }
    return f;
  }

  NcPoly parse_poly() {
    skip_ws();
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    NcPoly f = parse_term();
    if (negate) f = -f;
    while (true) {
      skip_ws();
      if (eat('+')) f = f + parse_term();
      else if (eat('-')) f = f - parse_term();
      else break;
    }
    return f;
  }
};

} // namespace

NcPoly parse_poly(const std::string& text, Fp field, std::uint32_t ngens) {
  PolyParser p{text, 0, field, ngens};
  NcPoly f = p.parse_poly();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

} // namespace kf
