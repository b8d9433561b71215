#include "koszulforge/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace kf {

namespace {

constexpr std::int64_t kCountCap =
    std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::size_t kEnumerationCap = 4'000'000;

struct RuleEntry {
  Word lead;
  NcPoly tail;
  bool alive = true;

  NcPoly as_poly(Fp field, std::uint32_t ngens) const {
    NcPoly f = NcPoly::monomial(field, ngens, lead);
    return f - tail;
  }
};

// Reduction against a working rule set; identical strategy to normal_form
// below but over RuleEntry with dead entries skipped.
template <typename Rules>
NcPoly reduce_poly(NcPoly f, const Rules& rules, Fp field,
                   const MonomialOrder& ord) {
  while (true) {
    // Pick the ≺-greatest reducible word.
    const Word* target = nullptr;
    Scalar coeff = 0;
    std::size_t rule_idx = 0, pos = 0;
    for (const auto& [w, c] : f.terms()) {
      std::size_t p = 0, ri = 0;
      bool hit = false;
      std::size_t best_pos = 0, best_rule = 0;
      for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!rules[i].alive) continue;
        if (find_subword(w, rules[i].lead, p)) {
          if (!hit || p < best_pos) {
            hit = true;
            best_pos = p;
            best_rule = i;
          }
        }
        (void)ri;
      }
      if (!hit) continue;
      if (!target || ord.less(*target, w)) {
        target = &w;
        coeff = c;
        rule_idx = best_rule;
        pos = best_pos;
      }
    }
    if (!target) return f;
    const Word w = *target;
    decltype(auto) rule = rules[rule_idx];
    const Word prefix(w.begin(), w.begin() + pos);
    const Word suffix(w.begin() + pos + rule.lead.size(), w.end());
    f.add_term(w, field.neg(coeff));
    for (const auto& [t, b] : rule.tail.terms())
      f.add_term(concat(prefix, concat(t, suffix)),
                 field.mul(coeff, b));
  }
}

struct AliveView {
  const std::vector<RewriteRule>& rules;
  struct Shim {
    const Word& lead;
    const NcPoly& tail;
    static constexpr bool alive = true;
  };
  std::size_t size() const { return rules.size(); }
  Shim operator[](std::size_t i) const { return {rules[i].lead, rules[i].tail}; }
};

struct OverlapTask {
  int degree;
  std::size_t id1, id2; // rule of the prefix part, rule of the suffix part
  std::size_t hang;     // lead1's length minus overlap length

  bool operator>(const OverlapTask& o) const {
    if (degree != o.degree) return degree > o.degree;
    if (id1 != o.id1) return id1 > o.id1;
    if (id2 != o.id2) return id2 > o.id2;
    return hang > o.hang;
  }
};

} // namespace

NcPoly normal_form(const NcPoly& f, const RewriteSystem& sys) {
  if (!(f.field() == sys.field) || f.ngens() != sys.ngens)
    throw ValidationError("polynomial does not match the rewrite system");
  return reduce_poly(f, AliveView{sys.rules}, sys.field, sys.ord);
}

CompletionResult complete(const std::vector<NcPoly>& relators,
                          const MonomialOrder& ord, Fp field,
                          std::uint32_t ngens, int nmax) {
  if (ord.ngens() != ngens)
    throw ValidationError("order arity does not match generator count");
  CompletionResult result{RewriteSystem(field, ngens, ord), false, {}};

  std::vector<RuleEntry> entries;
  std::priority_queue<OverlapTask, std::vector<OverlapTask>,
                      std::greater<OverlapTask>>
      tasks;
  int stamp = nmax;

  auto enqueue_overlaps = [&](std::size_t id) {
    const Word& lead = entries[id].lead;
    for (std::size_t other = 0; other < entries.size(); ++other) {
      if (!entries[other].alive) continue;
      const Word& lead2 = entries[other].lead;
      // suffix of `lead` = prefix of `lead2`, proper on both sides
      for (std::size_t k = 1; k < std::min(lead.size(), lead2.size()); ++k) {
        bool match = true;
        for (std::size_t t = 0; t < k; ++t)
          if (lead[lead.size() - k + t] != lead2[t]) {
            match = false;
            break;
          }
        if (match)
          tasks.push(OverlapTask{int(lead.size() + lead2.size() - k), id,
                                 other, lead.size() - k});
      }
      if (other == id) continue;
      const Word& l2 = entries[other].lead;
      for (std::size_t k = 1; k < std::min(l2.size(), lead.size()); ++k) {
        bool match = true;
        for (std::size_t t = 0; t < k; ++t)
          if (l2[l2.size() - k + t] != lead[t]) {
            match = false;
            break;
          }
        if (match)
          tasks.push(OverlapTask{int(l2.size() + lead.size() - k), other, id,
                                 l2.size() - k});
      }
    }
  };

  std::deque<NcPoly> inbox;

  auto absorb = [&](NcPoly f) {
    f = reduce_poly(std::move(f), entries, field, ord);
    if (f.is_zero()) return;
    auto [lead, c] = leading_monomial(f, ord);
    NcPoly monic = f.scaled(field.inv(c));
    NcPoly tail = NcPoly::monomial(field, ngens, lead) - monic;
    const std::size_t id = entries.size();
    entries.push_back(RuleEntry{lead, std::move(tail), true});
    // Interreduce: retire rules whose lead contains the new lead, and
    // renormalize every surviving tail.
    for (std::size_t i = 0; i < id; ++i) {
      if (!entries[i].alive) continue;
      std::size_t pos;
      if (find_subword(entries[i].lead, lead, pos)) {
        entries[i].alive = false;
        inbox.push_back(entries[i].as_poly(field, ngens));
      }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].alive) continue;
      entries[i].tail = reduce_poly(entries[i].tail, entries, field, ord);
    }
    enqueue_overlaps(id);
  };

  for (const NcPoly& rel : relators) {
    if (rel.is_zero()) continue;
    if (!rel.homogeneous() || rel.degree() < 2)
      throw ValidationError("relator is not homogeneous of degree >= 2: " +
                            to_string(rel));
    if (!(rel.field() == field) || rel.ngens() != ngens)
      throw ValidationError("relator arity or modulus mismatch");
    if (rel.degree() > nmax) {
      result.budget_exhausted = true;
      stamp = std::min(stamp, rel.degree() - 1);
      result.notes.push_back("relator of degree " +
                             std::to_string(rel.degree()) +
                             " exceeds the completion budget nmax=" +
                             std::to_string(nmax));
      continue;
    }
    inbox.push_back(rel);
  }

  while (!inbox.empty() || !tasks.empty()) {
    if (!inbox.empty()) {
      NcPoly f = std::move(inbox.front());
      inbox.pop_front();
      absorb(std::move(f));
      continue;
    }
    const OverlapTask task = tasks.top();
    tasks.pop();
    if (task.degree > nmax) break; // queue is degree-monotone
    if (!entries[task.id1].alive || !entries[task.id2].alive) continue;
    const RuleEntry& r1 = entries[task.id1];
    const RuleEntry& r2 = entries[task.id2];
    if (task.hang >= r1.lead.size()) continue; // stale after interreduction
    const Word prefix(r1.lead.begin(), r1.lead.begin() + task.hang);
    const std::size_t k = r1.lead.size() - task.hang;
    if (k >= r2.lead.size()) continue;
    bool still = true;
    for (std::size_t t = 0; t < k; ++t)
      if (r1.lead[task.hang + t] != r2.lead[t]) {
        still = false;
        break;
      }
    if (!still) continue;
    const Word suffix(r2.lead.begin() + k, r2.lead.end());
    // Reduce the overlap word u·v·w both ways; the residue is the
    // difference tail1·w - u·tail2.
    NcPoly left = multiply(r1.tail, NcPoly::monomial(field, ngens, suffix));
    NcPoly right = multiply(NcPoly::monomial(field, ngens, prefix), r2.tail);
    absorb(left - right);
  }

  result.system.complete_up_to = stamp;
  for (const RuleEntry& e : entries)
    if (e.alive) result.system.rules.push_back(RewriteRule{e.lead, e.tail});
  std::sort(result.system.rules.begin(), result.system.rules.end(),
            [&](const RewriteRule& a, const RewriteRule& b) {
              return ord.less(a.lead, b.lead);
            });
  return result;
}

bool pbw_certificate(const RewriteSystem& sys) {
  if (sys.complete_up_to < 3)
    throw ValidationError("pbw_certificate needs completion to degree >= 3");
  for (const RewriteRule& r : sys.rules)
    if (r.lead.size() != 2) return false;
  // Re-verify every degree-3 overlap explicitly.
  for (const RewriteRule& r1 : sys.rules)
    for (const RewriteRule& r2 : sys.rules) {
      if (r1.lead[1] != r2.lead[0]) continue;
      const Word a{r1.lead[0]};
      const Word d{r2.lead[1]};
      NcPoly left = multiply(r1.tail, NcPoly::monomial(sys.field, sys.ngens, d));
      NcPoly right = multiply(NcPoly::monomial(sys.field, sys.ngens, a), r2.tail);
      if (!normal_form(left - right, sys).is_zero()) return false;
    }
  return true;
}

namespace {

bool lead_matches_suffix(const Word& w, const Word& lead) {
  if (lead.size() > w.size()) return false;
  const std::size_t off = w.size() - lead.size();
  for (std::size_t t = 0; t < lead.size(); ++t)
    if (w[off + t] != lead[t]) return false;
  return true;
}

} // namespace

std::vector<std::vector<Word>> normal_word_basis(const RewriteSystem& sys,
                                                 int nmax) {
  std::vector<std::vector<Word>> levels;
  levels.push_back({Word{}});
  std::size_t total = 1;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Word> next;
    for (const Word& w : levels.back())
      for (std::uint32_t g = 1; g <= sys.ngens; ++g) {
        Word ext = w;
        ext.push_back(g);
        bool normal = true;
        for (const RewriteRule& r : sys.rules)
          if (lead_matches_suffix(ext, r.lead)) {
            normal = false;
            break;
          }
        if (normal) next.push_back(std::move(ext));
      }
    total += next.size();
    if (total > kEnumerationCap)
      throw BudgetError("normal-word enumeration exceeds " +
                        std::to_string(kEnumerationCap) + " words");
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<std::int64_t> normal_word_counts(const RewriteSystem& sys,
                                             int nmax) {
  const std::uint32_t d = sys.ngens;
  std::vector<std::int64_t> counts;
  counts.push_back(1);
  if (nmax == 0) return counts;

  bool quadratic = true;
  for (const RewriteRule& r : sys.rules)
    if (r.lead.size() != 2) {
      quadratic = false;
      break;
    }

  if (quadratic) {
    // Walk counting on the allowed-pair graph.
    std::vector<std::vector<std::int64_t>> allowed(
        d, std::vector<std::int64_t>(d, 1));
    for (const RewriteRule& r : sys.rules)
      allowed[r.lead[0] - 1][r.lead[1] - 1] = 0;
    std::vector<std::int64_t> ending(d, 1); // degree-1 words by last letter
    counts.push_back(std::int64_t(d));
    for (int n = 2; n <= nmax; ++n) {
      std::vector<std::int64_t> next(d, 0);
      for (std::uint32_t i = 0; i < d; ++i) {
        if (ending[i] == 0) continue;
        for (std::uint32_t j = 0; j < d; ++j)
          if (allowed[i][j]) {
            next[j] += ending[i];
            if (next[j] > kCountCap)
              throw BudgetError("normal-word count overflow at degree " +
                                std::to_string(n));
          }
      }
      std::int64_t sum = 0;
      for (std::int64_t v : next) sum += v;
      counts.push_back(sum);
      ending = std::move(next);
    }
    return counts;
  }

  const auto levels = normal_word_basis(sys, nmax);
  counts.clear();
  for (const auto& level : levels)
    counts.push_back(std::int64_t(level.size()));
  return counts;
}

std::vector<std::int64_t> hilbert_coeffs(const std::vector<NcPoly>& relators,
                                         const MonomialOrder& ord, Fp field,
                                         std::uint32_t ngens, int nmax) {
  if (nmax < 0) throw ValidationError("negative degree bound");
  CompletionResult comp = complete(relators, ord, field, ngens, nmax);
  if (comp.system.complete_up_to < nmax) {
    std::string msg = "completion budget exhausted";
    for (const std::string& n : comp.notes) msg += "; " + n;
    throw BudgetError(msg);
  }
  return normal_word_counts(comp.system, nmax);
}

CombinatorialResult combinatorially_free(const std::vector<Word>& leads) {
  for (const Word& w : leads)
    if (w.empty()) throw ValidationError("empty word in leading-monomial set");
  for (std::size_t i = 0; i < leads.size(); ++i)
    for (std::size_t j = 0; j < leads.size(); ++j) {
      if (i != j) {
        std::size_t pos;
        if (find_subword(leads[j], leads[i], pos))
          return {false,
                  CombinatorialWitness{
                      i, j, to_string(leads[i]) + " is a subword of " +
                                to_string(leads[j])}};
      }
      const Word& a = leads[i];
      const Word& b = leads[j];
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        bool match = true;
        for (std::size_t t = 0; t < k; ++t)
          if (a[a.size() - k + t] != b[t]) {
            match = false;
            break;
          }
        if (match)
          return {false,
                  CombinatorialWitness{
                      i, j, "suffix of " + to_string(a) + " of length " +
                                std::to_string(k) + " is a prefix of " +
                                to_string(b)}};
      }
    }
  return {true, std::nullopt};
}

} // namespace kf
