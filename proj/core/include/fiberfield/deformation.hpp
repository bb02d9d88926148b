#ifndef FIBERFIELD_DEFORMATION_HPP
#define FIBERFIELD_DEFORMATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fiberfield/liealg.hpp"

namespace fiberfield {

/// Structure-constant table of a finite-dimensional Lie algebra over Q,
/// stored on i<j pairs.
using FiberTable = std::map<std::pair<int, int>, SparseVec<Rational>>;

FiberTable negate_table(const FiberTable& t);
bool tables_equal(const FiberTable& a, const FiberTable& b);

/// A-Lie algebra presented on a free A-basis, A = Q[t]: labels plus an
/// antisymmetric bracket table with polynomial entries satisfying Jacobi
/// identically in t, together with the augmentation point.
class FreeBasisFamily {
 public:
  FreeBasisFamily(std::vector<std::string> labels,
                  std::map<std::pair<int, int>, SparseVec<RatFunc>> table, Rational t0);

  // The current algebra g0 (x) Q[t]: constant entries, the trivial bracket.
  static FreeBasisFamily current_algebra(std::vector<std::string> labels, const FiberTable& g0,
                                         const Rational& t0);
  // Entrywise multiple p(t) * [,] of a constant table.
  static FreeBasisFamily scaled_bracket(std::vector<std::string> labels, const FiberTable& g0,
                                        const UniPoly& factor, const Rational& t0);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& augmentation_point() const { return t0_; }
  const std::map<std::pair<int, int>, SparseVec<RatFunc>>& table() const { return table_; }

  // Evaluate every entry at t = r: the concrete quotient by the ideal
  // I = span{a x (x) alpha - x (x) eps(a) alpha}.
  FiberTable fiber_table(const Rational& r) const;
  FiberTable fiber_table() const { return fiber_table(t0_); }

  GradedLieAlgebra<RatFunc> parametric_algebra() const;
  GradedLieAlgebra<Rational> fiber_algebra(const Rational& r) const;

 private:
  void validate() const;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, SparseVec<RatFunc>> table_;
  Rational t0_;
};

/// General global deformation datum: free-basis presentation or a solved
/// derivation-module presentation over Q[t], plus the augmentation.
struct DeformationFamily {
  std::variant<FreeBasisFamily, DerivationBasis<RatFunc>> presentation;
  Rational t0;

  bool is_free_basis() const { return presentation.index() == 0; }
  const FreeBasisFamily& free_basis() const { return std::get<0>(presentation); }
  const DerivationBasis<RatFunc>& der_module() const { return std::get<1>(presentation); }
};

/// Fiber of a deformation family at a rational point: the evaluated
/// structure-constant table for a free presentation, the specialized
/// derivation basis otherwise.
using FamilyFiber = std::variant<FiberTable, DerivationBasis<Rational>>;

inline FamilyFiber specialize(const DeformationFamily& family, const Rational& t0) {
  if (family.is_free_basis()) return family.free_basis().fiber_table(t0);
  return specialize(family.der_module(), t0);
}

/// Outcome of the product-type test (conditions (1)-(2)): bilinearity is
/// structural in the free presentation; condition (2) compares the fiber of
/// the table at the augmentation with the reference bracket on g0.
struct ProductTypeReport {
  bool applicable = false;
  std::string explanation;  // set when not applicable
  bool is_product_type = false;
  std::string witness;  // first violated entry, when any
};

ProductTypeReport product_type_check(const DeformationFamily& family, const FiberTable& g0);

// Realize g (x)_A Q by evaluating the bracket table at the augmentation.
FiberTable fiber_ideal_quotient(const FreeBasisFamily& family);

/// Check that the linear map with diagonal matrix `diag` intertwines the two
/// bracket tables ([phi x, phi y]_B = phi [x, y]_A). Used by the rescaling
/// oracle x -> -x.
bool diagonal_map_is_bracket_hom(const FiberTable& a, const FiberTable& b,
                                 const std::vector<Rational>& diag);

}  // namespace fiberfield

#endif
