#include "koszulforge/quadratic.hpp"

#include "koszulforge/rewrite.hpp"

namespace kf {

std::string to_string(CombineKind kind) {
  switch (kind) {
    case CombineKind::DirectSum: return "direct_sum";
    case CombineKind::FreeProduct: return "free_product";
    case CombineKind::SymmetricTensor: return "symmetric_tensor";
    case CombineKind::WedgeProduct: return "wedge_product";
  }
  return "?";
}

FpVector poly_to_pair_vector(const NcPoly& f, std::uint32_t dim) {
  FpVector v(std::size_t(dim) * dim, 0);
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != 2)
      throw ValidationError("expected a homogeneous degree-2 polynomial, got "
                            "term of degree " + std::to_string(w.size()));
    v[QuadraticAlgebra::pair_index(w[0], w[1], dim)] = c;
  }
  return v;
}

NcPoly pair_vector_to_poly(const FpVector& v, Fp field, std::uint32_t dim) {
  NcPoly f(field, dim);
  for (std::uint32_t i = 1; i <= dim; ++i)
    for (std::uint32_t j = 1; j <= dim; ++j) {
      const Scalar c = v[QuadraticAlgebra::pair_index(i, j, dim)];
      if (c) f.add_term(Word{i, j}, c);
    }
  return f;
}

QuadraticAlgebra QuadraticAlgebra::from_relators(
    Fp field, std::uint32_t dim, const std::vector<NcPoly>& relators) {
  if (dim == 0 && !relators.empty())
    throw ValidationError("nonempty relators over an empty generator set");
  std::vector<FpVector> rows;
  rows.reserve(relators.size());
  for (const NcPoly& f : relators) {
    if (f.is_zero() || !f.homogeneous() || f.degree() != 2)
      throw ValidationError("relator is not homogeneous of degree 2: " +
                            to_string(f));
    if (f.ngens() != dim || !(f.field() == field))
      throw ValidationError("relator arity or modulus mismatch");
    rows.push_back(poly_to_pair_vector(f, dim));
  }
  return from_omega(field, dim, rows);
}

QuadraticAlgebra QuadraticAlgebra::from_omega(
    Fp field, std::uint32_t dim, const std::vector<FpVector>& spanning) {
  QuadraticAlgebra a(field, dim);
  a.omega_ = row_space_canonical(spanning, std::size_t(dim) * dim, field);
  return a;
}

std::vector<NcPoly> QuadraticAlgebra::relators() const {
  std::vector<NcPoly> polys;
  polys.reserve(omega_.size());
  for (const FpVector& row : omega_)
    polys.push_back(pair_vector_to_poly(row, field_, dim_));
  return polys;
}

QuadraticAlgebra QuadraticAlgebra::dual() const {
  QuadraticAlgebra d(field_, dim_);
  d.omega_ = annihilator(omega_, std::size_t(dim_) * dim_, field_);
  return d;
}

namespace {

// Re-index a pair vector of `a` (or of `b`, shifted by `offset`) into the
// pair coordinates of the combined algebra on dim generators.
FpVector embed_block(const FpVector& v, std::uint32_t block_dim,
                     std::uint32_t offset, std::uint32_t dim) {
  FpVector out(std::size_t(dim) * dim, 0);
  for (std::uint32_t i = 1; i <= block_dim; ++i)
    for (std::uint32_t j = 1; j <= block_dim; ++j) {
      const Scalar c = v[QuadraticAlgebra::pair_index(i, j, block_dim)];
      if (c)
        out[QuadraticAlgebra::pair_index(i + offset, j + offset, dim)] = c;
    }
  return out;
}

} // namespace

QuadraticAlgebra combine(const QuadraticAlgebra& a, const QuadraticAlgebra& b,
                         CombineKind kind) {
  if (!(a.field() == b.field()))
    throw ValidationError("modulus mismatch in combine");
  const Fp field = a.field();
  const std::uint32_t da = a.dim_v(), db = b.dim_v();
  const std::uint32_t dim = da + db;

  std::vector<FpVector> rows;
  for (const FpVector& v : a.omega()) rows.push_back(embed_block(v, da, 0, dim));
  for (const FpVector& v : b.omega()) rows.push_back(embed_block(v, db, da, dim));

  // Mixed relations, enumerated with the A-block generator on the left.
  for (std::uint32_t i = 1; i <= da; ++i)
    for (std::uint32_t j = 1; j <= db; ++j) {
      const std::size_t ab = QuadraticAlgebra::pair_index(i, da + j, dim);
      const std::size_t ba = QuadraticAlgebra::pair_index(da + j, i, dim);
      FpVector v(std::size_t(dim) * dim, 0);
      switch (kind) {
        case CombineKind::DirectSum:
          v[ab] = 1;
          rows.push_back(v);
          v[ab] = 0;
          v[ba] = 1;
          rows.push_back(v);
          break;
        case CombineKind::FreeProduct:
          break;
        case CombineKind::SymmetricTensor:
          v[ab] = 1;
          v[ba] = field.neg(1);
          rows.push_back(v);
          break;
        case CombineKind::WedgeProduct:
          v[ab] = 1;
          v[ba] = 1;
          rows.push_back(v);
          break;
      }
    }

  QuadraticAlgebra out = QuadraticAlgebra::from_omega(field, dim, rows);
  out.provenance_ = std::make_shared<const QuadraticAlgebra::Provenance>(
      QuadraticAlgebra::Provenance{
          kind, std::make_shared<const QuadraticAlgebra>(a),
          std::make_shared<const QuadraticAlgebra>(b)});
  return out;
}

std::int64_t component_dim(const QuadraticAlgebra& a, int n) {
  if (n < 0) throw ValidationError("negative degree");
  return hilbert_coeffs(a.relators(), MonomialOrder(a.dim_v()), a.field(),
                        a.dim_v(), n)[std::size_t(n)];
}

KBound k_of(const QuadraticAlgebra& a, int nmax) {
  if (nmax < 2) throw ValidationError("k_of requires nmax >= 2");
  const auto dims = hilbert_coeffs(a.relators(), MonomialOrder(a.dim_v()),
                                   a.field(), a.dim_v(), nmax);
  for (int n = 0; n <= nmax; ++n)
    if (dims[std::size_t(n)] == 0) return {true, n - 1};
  return {false, nmax};
}

NcPoly demushkin_relator(Fp field, std::uint32_t dim, DemushkinVariant v) {
  if (v == DemushkinVariant::Auto) {
    if (field.p() != 2) v = DemushkinVariant::A;
    else v = (dim % 2 == 0) ? DemushkinVariant::B : DemushkinVariant::C;
  }
  NcPoly f(field, dim);
  switch (v) {
    case DemushkinVariant::A:
      if (dim % 2 != 0 || dim < 2)
        throw ValidationError("variant (a) needs an even number of generators");
      for (std::uint32_t k = 1; k + 1 <= dim; k += 2)
        f = f + commutator_poly(k, k + 1, field, dim);
      break;
    case DemushkinVariant::B:
      if (field.p() != 2)
        throw ValidationError("variant (b) is a p=2 family");
      if (dim % 2 != 0 || dim < 2)
        throw ValidationError("variant (b) needs an even number of generators");
      f.add_term(Word{1, 1}, 1);
      f = f + commutator_poly(1, 2, field, dim);
      for (std::uint32_t k = 3; k + 1 <= dim; k += 2)
        f = f + commutator_poly(k, k + 1, field, dim);
      break;
    case DemushkinVariant::C:
      if (field.p() != 2)
        throw ValidationError("variant (c) is a p=2 family");
      if (dim % 2 != 1)
        throw ValidationError("variant (c) needs an odd number of generators");
      f.add_term(Word{1, 1}, 1);
      for (std::uint32_t k = 2; k + 1 <= dim; k += 2)
        f = f + commutator_poly(k, k + 1, field, dim);
      break;
    case DemushkinVariant::Auto:
      break;
  }
  return f;
}

QuadraticAlgebra demushkin_algebra(Fp field, std::uint32_t dim,
                                   DemushkinVariant v) {
  return QuadraticAlgebra::from_relators(field, dim,
                                         {demushkin_relator(field, dim, v)});
}

} // namespace kf
