#ifndef FIBERFIELD_RINGMAP_HPP
#define FIBERFIELD_RINGMAP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiberfield/matrix.hpp"
#include "fiberfield/ring.hpp"

namespace fiberfield {

/// Algebra map source -> target given by one target image per source
/// variable. Well-definedness (generators map into the target ideal) is
/// checked at construction.
template <class K>
class RingMap {
 public:
  RingMap() = default;
  RingMap(QuotientRing<K> source, QuotientRing<K> target, std::vector<MultiPoly<K>> images)
      : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != src_.nvars())
      throw InvariantError("ring map needs one image per source variable");
    for (auto& im : images_) im = tgt_.normal_form(im);
    for (const auto& g : src_.ideal().generators())
      if (!apply_raw(g).is_zero())
        throw InvariantError("ring map is not well defined: generator image " +
                             apply_raw(g).str(tgt_.vars()) + " != 0");
  }

  const QuotientRing<K>& source() const { return src_; }
  const QuotientRing<K>& target() const { return tgt_; }
  const std::vector<MultiPoly<K>>& images() const { return images_; }

  MultiPoly<K> apply(const MultiPoly<K>& p) const { return apply_raw(p); }

  // Solve phi(p) = q for p with staircase support of degree <= bound.
  std::optional<MultiPoly<K>> preimage(const MultiPoly<K>& q, int bound) const;

 private:
  MultiPoly<K> apply_raw(const MultiPoly<K>& p) const {
    return tgt_.normal_form(p.substitute(images_));
  }

  QuotientRing<K> src_, tgt_;
  std::vector<MultiPoly<K>> images_;
};

// True when phi and psi are mutually inverse on ring variables.
template <class K>
bool verify_mutually_inverse(const RingMap<K>& phi, const RingMap<K>& psi) {
  if (!phi.source().same_ring(psi.target()) || !phi.target().same_ring(psi.source())) return false;
  for (int i = 0; i < phi.source().nvars(); ++i)
    if (psi.apply(phi.images()[i]) != phi.source().normal_form(phi.source().var(i)))
      return false;
  for (int i = 0; i < psi.source().nvars(); ++i)
    if (phi.apply(psi.images()[i]) != psi.source().normal_form(psi.source().var(i)))
      return false;
  return true;
}

template <class K>
std::optional<MultiPoly<K>> RingMap<K>::preimage(const MultiPoly<K>& q, int bound) const {
  const auto monos = src_.staircase(bound);
  std::vector<std::vector<K>> cols;
  std::vector<Monomial> support;
  // Collect the support of all mapped staircase monomials plus the target.
  const MultiPoly<K> qn = tgt_.normal_form(q);
  std::vector<MultiPoly<K>> mapped;
  mapped.reserve(monos.size());
  for (const auto& m : monos)
    mapped.push_back(apply(MultiPoly<K>::monomial(src_.nvars(), src_.order(), m, K::one())));
  auto note = [&](const MultiPoly<K>& p) {
    for (const auto& t : p.terms()) {
      bool found = false;
      for (const auto& s : support)
        if (s == t.first) {
          found = true;
          break;
        }
      if (!found) support.push_back(t.first);
    }
  };
  for (const auto& p : mapped) note(p);
  note(qn);
  auto vec_of = [&](const MultiPoly<K>& p) {
    std::vector<K> v;
    v.reserve(support.size());
    for (const auto& s : support) v.push_back(p.coeff(s));
    return v;
  };
  for (const auto& p : mapped) cols.push_back(vec_of(p));
  LinearSpan<K> span(cols);
  auto c = span.coords(vec_of(qn));
  if (!c) return std::nullopt;
  MultiPoly<K> out(src_.nvars(), src_.order());
  for (size_t i = 0; i < monos.size(); ++i)
    out += MultiPoly<K>::monomial(src_.nvars(), src_.order(), monos[i], (*c)[i]);
  return src_.normal_form(out);
}

}  // namespace fiberfield

#endif
