#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "koszulforge/group.hpp"
#include "koszulforge/quadratic.hpp"

namespace kf {

/// Finite simplicial graph: vertices 1..n, unordered distinct edges.
class Graph {
public:
  Graph(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::uint32_t vertex_count() const { return n_; }
  const std::set<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_; // pairs normalized i < j
  }
  bool adjacent(std::uint32_t i, std::uint32_t j) const;

private:
  std::uint32_t n_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

/// "n; i-j, k-l, ..." — the edge list may be empty ("4;").
Graph parse_graph(const std::string& text);
std::string to_string(const Graph& g);

struct TriangleResult {
  bool triangle_free;
  std::array<std::uint32_t, 3> witness; // pairwise adjacent when !triangle_free
};

TriangleResult triangle_free(const Graph& g);

/// Right-angled Artin algebra: commutators over the edges.
QuadraticAlgebra raag_algebra(const Graph& g, Fp field);

/// Exterior Stanley-Reisner algebra: exterior relations plus the products
/// over non-edges.
QuadraticAlgebra stanley_reisner(const Graph& g, Fp field);

/// c_n = number of n-cliques, n = 0..nmax.
std::vector<std::int64_t> clique_series(const Graph& g, int nmax);

/// lambda/mu keyed by directed edge (i, j) with i < j; absent keys mean 0.
/// Entries must be divisible by p (by 4 when p = 2).
struct GenRaagParams {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> lambda, mu;
};

/// Generalised right-angled Artin pro-p presentation: one relator
/// [v_i, v_j] * v_j^{-mu_ij} * v_i^{-lambda_ij} per edge i < j.
GroupPresentation gen_raag_group(const Graph& g, Fp field,
                                 const GenRaagParams& params = {});

} // namespace kf
