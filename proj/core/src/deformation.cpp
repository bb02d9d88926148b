#include "fiberfield/deformation.hpp"

namespace fiberfield {

FiberTable negate_table(const FiberTable& t) {
  FiberTable out;
  for (const auto& [ij, v] : t) {
    SparseVec<Rational> nv = v;
    for (auto& e : nv) e.second = -e.second;
    out[ij] = std::move(nv);
  }
  return out;
}

bool tables_equal(const FiberTable& a, const FiberTable& b) {
  auto normal = [](const FiberTable& t) {
    FiberTable out;
    for (const auto& [ij, v] : t) {
      auto nv = sparse_normalize(v);
      if (!nv.empty()) out[ij] = std::move(nv);
    }
    return out;
  };
  return normal(a) == normal(b);
}

FreeBasisFamily::FreeBasisFamily(std::vector<std::string> labels,
                                 std::map<std::pair<int, int>, SparseVec<RatFunc>> table,
                                 Rational t0)
    : labels_(std::move(labels)), t0_(std::move(t0)) {
  for (auto& [ij, v] : table) {
    const auto [i, j] = ij;
    if (i >= j || i < 0 || j >= dim()) throw InvariantError("bracket table index out of range");
    for (const auto& [k, c] : v) {
      if (k < 0 || k >= dim()) throw InvariantError("bracket value index out of range");
      if (!c.is_polynomial())
        throw InvariantError("free-basis family entries must be polynomial in t");
    }
    auto nv = sparse_normalize(v);
    if (!nv.empty()) table_[ij] = std::move(nv);
  }
  validate();
}

void FreeBasisFamily::validate() const {
  // Jacobi must hold identically in t.
  const auto L = parametric_algebra();
  const auto res = jacobi_check(L);
  if (!res.ok)
    throw InvariantError("family bracket violates the Jacobi identity at " +
                         res.first_violation);
}

FreeBasisFamily FreeBasisFamily::current_algebra(std::vector<std::string> labels,
                                                 const FiberTable& g0, const Rational& t0) {
  std::map<std::pair<int, int>, SparseVec<RatFunc>> table;
  for (const auto& [ij, v] : g0) {
    SparseVec<RatFunc> pv;
    for (const auto& [k, c] : v) pv.push_back({k, RatFunc(c)});
    table[ij] = std::move(pv);
  }
  return FreeBasisFamily(std::move(labels), std::move(table), t0);
}

FreeBasisFamily FreeBasisFamily::scaled_bracket(std::vector<std::string> labels,
                                                const FiberTable& g0, const UniPoly& factor,
                                                const Rational& t0) {
  std::map<std::pair<int, int>, SparseVec<RatFunc>> table;
  for (const auto& [ij, v] : g0) {
    SparseVec<RatFunc> pv;
    for (const auto& [k, c] : v) pv.push_back({k, RatFunc(factor.scaled(c))});
    table[ij] = std::move(pv);
  }
  return FreeBasisFamily(std::move(labels), std::move(table), t0);
}

FiberTable FreeBasisFamily::fiber_table(const Rational& r) const {
  FiberTable out;
  for (const auto& [ij, v] : table_) {
    SparseVec<Rational> fv;
    for (const auto& [k, c] : v) fv.push_back({k, c.eval(r)});
    auto nv = sparse_normalize(std::move(fv));
    if (!nv.empty()) out[ij] = std::move(nv);
  }
  return out;
}

GradedLieAlgebra<RatFunc> FreeBasisFamily::parametric_algebra() const {
  auto t = table_;
  // The family bracket is total on the free basis.
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (!t.count({i, j})) t[{i, j}] = {};
  return GradedLieAlgebra<RatFunc>(labels_, std::vector<int>(labels_.size(), 0), std::move(t));
}

GradedLieAlgebra<Rational> FreeBasisFamily::fiber_algebra(const Rational& r) const {
  std::map<std::pair<int, int>, SparseVec<Rational>> t;
  for (auto& [ij, v] : fiber_table(r)) t[ij] = v;
  // Every pair is recorded so the fiber bracket is total on the window.
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (!t.count({i, j})) t[{i, j}] = {};
  return GradedLieAlgebra<Rational>(labels_, std::vector<int>(labels_.size(), 0), std::move(t));
}

ProductTypeReport product_type_check(const DeformationFamily& family, const FiberTable& g0) {
  ProductTypeReport rep;
  if (!family.is_free_basis()) {
    rep.applicable = false;
    rep.explanation =
        "family is presented by its derivation module, which need not be a free A-module; "
        "the product-type conditions presuppose a free basis";
    return rep;
  }
  rep.applicable = true;
  const auto& fam = family.free_basis();
  // Condition (1), A-bilinearity, is automatic in the free presentation.
  // Condition (2): evaluating the table at the augmentation recovers g0.
  const FiberTable fiber = fam.fiber_table(family.t0);
  rep.is_product_type = true;
  for (int i = 0; i < fam.dim() && rep.is_product_type; ++i)
    for (int j = i + 1; j < fam.dim(); ++j) {
      auto get = [&](const FiberTable& t) {
        auto it = t.find({i, j});
        return it == t.end() ? SparseVec<Rational>{} : it->second;
      };
      if (sparse_normalize(get(fiber)) != sparse_normalize(get(g0))) {
        rep.is_product_type = false;
        rep.witness = "[" + fam.labels()[i] + "," + fam.labels()[j] + "]";
        break;
      }
    }
  return rep;
}

FiberTable fiber_ideal_quotient(const FreeBasisFamily& family) { return family.fiber_table(); }

bool diagonal_map_is_bracket_hom(const FiberTable& a, const FiberTable& b,
                                 const std::vector<Rational>& diag) {
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto get = [&](const FiberTable& t) {
        auto it = t.find({i, j});
        return it == t.end() ? SparseVec<Rational>{} : it->second;
      };
      // [phi e_i, phi e_j]_b = d_i d_j [e_i, e_j]_b  vs  phi([e_i,e_j]_a)
      SparseVec<Rational> lhs = get(b);
      for (auto& e : lhs) e.second = e.second * diag[i] * diag[j];
      SparseVec<Rational> rhs = get(a);
      for (auto& e : rhs) e.second = e.second * diag[e.first];
      if (sparse_normalize(std::move(lhs)) != sparse_normalize(std::move(rhs))) return false;
    }
  return true;
}

CohomologyBaseChangeReport cohomology_base_change_check(const FreeBasisFamily& family,
                                                        const std::vector<Rational>& points) {
  CohomologyBaseChangeReport rep;
  const auto parametric = family.parametric_algebra();
  const auto generic = ce_h2(parametric, 0, CoeffKind::Trivial, ClosurePolicy::Partial);
  rep.generic_h2 = generic.dim_h2;
  for (const auto& t0 : points) {
    const auto fiber = family.fiber_algebra(t0);
    const auto h = ce_h2(fiber, 0, CoeffKind::Trivial, ClosurePolicy::Partial);
    FiberCohomologyAgreement a;
    a.t0 = t0;
    a.fiber_h2 = h.dim_h2;
    a.agrees = (h.dim_h2 == rep.generic_h2);
    if (!a.agrees) rep.all_agree = false;
    rep.fibers.push_back(std::move(a));
  }
  return rep;
}

}  // namespace fiberfield
