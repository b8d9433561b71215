#include "koszulforge/graph.hpp"

#include <cctype>
#include <sstream>

namespace kf {

Graph::Graph(std::uint32_t n,
             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : n_(n) {
  for (auto [i, j] : edges) {
    if (i == j) throw ValidationError("loops are not allowed");
    if (i < 1 || j < 1 || i > n || j > n)
      throw ValidationError("edge endpoint out of range");
    edges_.insert({std::min(i, j), std::max(i, j)});
  }
}

bool Graph::adjacent(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return false;
  return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

Graph parse_graph(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_uint = [&]() -> std::uint32_t {
    skip_ws();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ValidationError("graph parse error: expected a number at offset " +
                            std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + std::uint64_t(text[pos] - '0');
      if (v > 1'000'000) throw ValidationError("graph number too large");
      ++pos;
    }
    return std::uint32_t(v);
  };

  const std::uint32_t n = parse_uint();
  skip_ws();
  if (pos >= text.size() || text[pos] != ';')
    throw ValidationError("graph parse error: expected ';' after vertex count");
  ++pos;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  skip_ws();
  while (pos < text.size()) {
    const std::uint32_t i = parse_uint();
    skip_ws();
    if (pos >= text.size() || text[pos] != '-')
      throw ValidationError("graph parse error: expected '-' in edge");
    ++pos;
    const std::uint32_t j = parse_uint();
    edges.push_back({i, j});
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw ValidationError("graph parse error: expected ',' between edges");
      ++pos;
      skip_ws();
    }
  }
  return Graph(n, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ";";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    os << (first ? " " : ", ") << i << "-" << j;
    first = false;
  }
  return os.str();
}

TriangleResult triangle_free(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (std::uint32_t k = j + 1; k <= n; ++k)
        if (g.adjacent(i, k) && g.adjacent(j, k))
          return {false, {i, j, k}};
    }
  return {true, {0, 0, 0}};
}

QuadraticAlgebra raag_algebra(const Graph& g, Fp field) {
  std::vector<NcPoly> relators;
  for (auto [i, j] : g.edges())
    relators.push_back(commutator_poly(i, j, field, g.vertex_count()));
  return QuadraticAlgebra::from_relators(field, g.vertex_count(), relators);
}

QuadraticAlgebra stanley_reisner(const Graph& g, Fp field) {
  const std::uint32_t n = g.vertex_count();
  std::vector<NcPoly> relators;
  for (std::uint32_t i = 1; i <= n; ++i)
    relators.push_back(NcPoly::monomial(field, n, Word{i, i}));
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      NcPoly anti(field, n);
      anti.add_term(Word{i, j}, 1);
      anti.add_term(Word{j, i}, 1);
      relators.push_back(std::move(anti));
      if (!g.adjacent(i, j))
        relators.push_back(NcPoly::monomial(field, n, Word{i, j}));
    }
  return QuadraticAlgebra::from_relators(field, n, relators);
}

namespace {

void count_cliques(const Graph& g, std::vector<std::uint32_t>& current,
                   std::uint32_t next, int nmax,
                   std::vector<std::int64_t>& counts) {
  const int size = int(current.size());
  if (size <= nmax) counts[std::size_t(size)] += 1;
  if (size == nmax) return;
  for (std::uint32_t v = next; v <= g.vertex_count(); ++v) {
    bool ok = true;
    for (std::uint32_t u : current)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(v);
    count_cliques(g, current, v + 1, nmax, counts);
    current.pop_back();
  }
}

} // namespace

std::vector<std::int64_t> clique_series(const Graph& g, int nmax) {
  if (nmax < 0) throw ValidationError("negative clique bound");
  std::vector<std::int64_t> counts(std::size_t(nmax) + 1, 0);
  std::vector<std::uint32_t> current;
  count_cliques(g, current, 1, nmax, counts);
  return counts;
}

GroupPresentation gen_raag_group(const Graph& g, Fp field,
                                 const GenRaagParams& params) {
  const std::int64_t p = field.p();
  const std::int64_t divisor = p == 2 ? 4 : p;
  auto lookup = [&](const auto& m, std::uint32_t i, std::uint32_t j) {
    auto it = m.find({i, j});
    return it == m.end() ? std::int64_t(0) : it->second;
  };
  std::vector<GroupWord> relators;
  for (auto [i, j] : g.edges()) {
    const std::int64_t lam = lookup(params.lambda, i, j);
    const std::int64_t mu = lookup(params.mu, i, j);
    if (lam % divisor != 0 || mu % divisor != 0)
      throw ValidationError(
          "edge parameters must be divisible by " + std::to_string(divisor) +
          " (edge " + std::to_string(i) + "-" + std::to_string(j) + ")");
    GroupWord r = GroupWord::commutator(GroupWord::generator(i),
                                        GroupWord::generator(j));
    r = r * GroupWord::generator(j, -mu) * GroupWord::generator(i, -lam);
    relators.push_back(std::move(r));
  }
  return GroupPresentation(field, g.vertex_count(), std::move(relators));
}

} // namespace kf
