#pragma once

// Test-side oracles, independent of the rewriting/completion path they check.

#include <cstdint>
#include <random>
#include <vector>

#include "koszulforge/fp.hpp"
#include "koszulforge/graph.hpp"
#include "koszulforge/ncpoly.hpp"
#include "koszulforge/quadratic.hpp"

namespace kf::test {

inline std::vector<Word> all_words(std::uint32_t d, int n) {
  std::vector<Word> words{Word{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * d);
    for (const Word& w : words)
      for (std::uint32_t g = 1; g <= d; ++g) {
        Word ext = w;
        ext.push_back(g);
        next.push_back(std::move(ext));
      }
    words = std::move(next);
  }
  return words;
}

inline std::size_t word_index(const Word& w, std::uint32_t d) {
  std::size_t idx = 0;
  for (std::uint32_t g : w) idx = idx * d + (g - 1);
  return idx;
}

// dim A_n for A = F_p<X>/(relators), by brute force: enumerate every word of
// degree n and mod out the degree-n slice of the ideal (all u * rho * v) by
// linear algebra. No Groebner machinery involved.
inline std::int64_t quotient_dim(const std::vector<NcPoly>& relators, Fp field,
                                 std::uint32_t d, int n) {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= d;
  EchelonAccumulator acc(field, total);
  for (const NcPoly& rel : relators) {
    const int s = rel.degree();
    if (s < 0 || s > n) continue;
    for (int a = 0; a + s <= n; ++a) {
      for (const Word& u : all_words(d, a))
        for (const Word& v : all_words(d, n - s - a)) {
          FpVector row(total, 0);
          for (const auto& [w, c] : rel.terms())
            row[word_index(concat(u, concat(w, v)), d)] = c;
          acc.insert(row);
        }
    }
  }
  return std::int64_t(total) - std::int64_t(acc.rank());
}

inline std::vector<std::int64_t> quotient_dims(
    const std::vector<NcPoly>& relators, Fp field, std::uint32_t d, int nmax) {
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= nmax; ++n)
    dims.push_back(quotient_dim(relators, field, d, n));
  return dims;
}

// Coefficients of 1 / sum(coeffs[k] z^k) with coeffs[0] = 1.
inline std::vector<std::int64_t> series_inverse(
    const std::vector<std::int64_t>& denom, int nmax) {
  std::vector<std::int64_t> a(std::size_t(nmax) + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    std::int64_t acc = 0;
    for (int k = 1; k <= n && k < int(denom.size()); ++k)
      acc += denom[std::size_t(k)] * a[std::size_t(n - k)];
    a[std::size_t(n)] = -acc;
  }
  return a;
}

inline NcPoly random_quadratic_poly(std::mt19937_64& rng, Fp field,
                                    std::uint32_t d) {
  std::uniform_int_distribution<Scalar> coef(0, field.p() - 1);
  NcPoly f(field, d);
  for (std::uint32_t i = 1; i <= d; ++i)
    for (std::uint32_t j = 1; j <= d; ++j) f.add_term(Word{i, j}, coef(rng));
  return f;
}

inline QuadraticAlgebra random_algebra(std::mt19937_64& rng, Fp field,
                                       std::uint32_t d, std::size_t nrel) {
  std::vector<NcPoly> rels;
  for (std::size_t k = 0; k < nrel; ++k) {
    NcPoly f = random_quadratic_poly(rng, field, d);
    if (!f.is_zero()) rels.push_back(std::move(f));
  }
  return QuadraticAlgebra::from_relators(field, d, rels);
}

inline Graph random_graph(std::mt19937_64& rng, std::uint32_t n) {
  std::bernoulli_distribution edge(0.5);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j)
      if (edge(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

} // namespace kf::test
