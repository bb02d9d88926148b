#ifndef FIBERFIELD_MATRIX_HPP
#define FIBERFIELD_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fiberfield/ratfunc.hpp"

namespace fiberfield {

/// Dense rectangular matrix over an exact field K.
template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K::zero()) {}

  K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

namespace detail {

// Elimination domains: integers under Q, polynomials under Q(t). Rows are
// cleared to the domain first; all Bareiss divisions stay exact there.

struct IntDomain {
  using D = Int;
  using Field = Rational;
  static bool is_zero(const D& x) { return sgn(x) == 0; }
  static D zero() { return D(0); }
  static D one() { return D(1); }
  static D mul(const D& a, const D& b) { return a * b; }
  static D sub(const D& a, const D& b) { return a - b; }
  static D divexact(const D& a, const D& b) {
    D q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw InternalError("fraction-free elimination: inexact division");
    return q;
  }
  static std::vector<D> clear_row(const std::vector<Field>& row) {
    Int l(1);
    for (const auto& x : row) l = lcm(l, x.den());
    std::vector<D> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.num() * (l / x.den()));
    return out;
  }
  static D content(const std::vector<D>& v) {
    D g(0);
    for (const auto& x : v) g = fiberfield::gcd(g, x);
    return g;
  }
  static int sign_of(const D& x) { return sgn(x); }
  static Field to_field(const D& x) { return Rational(x); }
};

struct PolyDomain {
  using D = UniPoly;
  using Field = RatFunc;
  static bool is_zero(const D& x) { return x.is_zero(); }
  static D zero() { return UniPoly::zero(); }
  static D one() { return UniPoly::one(); }
  static D mul(const D& a, const D& b) { return a * b; }
  static D sub(const D& a, const D& b) { return a - b; }
  static D divexact(const D& a, const D& b) { return a.divexact(b); }
  static std::vector<D> clear_row(const std::vector<Field>& row) {
    UniPoly l = UniPoly::one();
    for (const auto& x : row) l = lcm(l, x.den());
    std::vector<D> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.num() * l.divexact(x.den()));
    return out;
  }
  static D content(const std::vector<D>& v) {
    D g;
    for (const auto& x : v) g = fiberfield::gcd(g, x);
    if (g.is_zero()) return g;
    // Fold the rational content in so the result exactly divides every entry.
    Rational rc(0);
    for (const auto& x : v) {
      const UniPoly q = x.divexact(g);
      const Rational c = q.content();
      rc = rc.is_zero() ? c : Rational(fiberfield::gcd(rc.num(), c.num()),
                                       fiberfield::lcm(rc.den(), c.den()));
      if (rc.is_one()) break;
    }
    return g.scaled(rc.is_zero() ? Rational(1) : rc);
  }
  static int sign_of(const D& x) { return x.is_zero() ? 0 : x.lc().sign(); }
  static Field to_field(const D& x) { return RatFunc(x); }
};

template <class K>
struct domain_for;
template <>
struct domain_for<Rational> {
  using type = IntDomain;
};
template <>
struct domain_for<RatFunc> {
  using type = PolyDomain;
};

// One-step fraction-free Gauss-Jordan. On return every pivot column has a
// single nonzero entry and all pivots carry the same value (the last pivot).
template <class Dom>
struct Echelon {
  std::vector<std::vector<typename Dom::D>> rows;
  std::vector<int> pivot_col;   // per echelon row
  std::vector<int> pivot_row;   // per pivot, the row index (= position)
  typename Dom::D denom = Dom::one();
  int ncols = 0;
};

template <class Dom>
Echelon<Dom> ffgj(std::vector<std::vector<typename Dom::D>> m, int ncols) {
  using D = typename Dom::D;
  Echelon<Dom> e;
  e.ncols = ncols;
  const int nrows = static_cast<int>(m.size());
  D prev = Dom::one();
  int r = 0;
  std::vector<int> pcols;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (!Dom::is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const int w = static_cast<int>(m[r].size());
    for (int i = 0; i < nrows; ++i) {
      if (i == r || Dom::is_zero(m[i][c])) {
        if (i != r) {
          // Still rescale the row so all pivots share one denominator.
          for (int j = 0; j < w; ++j)
            m[i][j] = Dom::divexact(Dom::mul(m[r][c], m[i][j]), prev);
        }
        continue;
      }
      for (int j = 0; j < w; ++j) {
        if (j == c) continue;
        m[i][j] = Dom::divexact(
            Dom::sub(Dom::mul(m[r][c], m[i][j]), Dom::mul(m[i][c], m[r][j])), prev);
      }
      m[i][c] = Dom::zero();
    }
    prev = m[r][c];
    pcols.push_back(c);
    ++r;
  }
  m.resize(r);  // discard zero rows
  e.rows = std::move(m);
  e.pivot_col = std::move(pcols);
  e.denom = prev;
  for (int i = 0; i < r; ++i) e.pivot_row.push_back(i);
  return e;
}

template <class Dom, class K>
std::vector<std::vector<typename Dom::D>> clear_matrix(const Mat<K>& m) {
  std::vector<std::vector<typename Dom::D>> rows;
  rows.reserve(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    std::vector<K> row(m.a.begin() + static_cast<size_t>(i) * m.cols,
                       m.a.begin() + static_cast<size_t>(i + 1) * m.cols);
    rows.push_back(Dom::clear_row(row));
  }
  return rows;
}

template <class Dom>
void normalize_vector(std::vector<typename Dom::D>& v) {
  using D = typename Dom::D;
  D g = Dom::content(v);
  if (Dom::is_zero(g)) return;
  for (auto& x : v) x = Dom::divexact(x, g);
  int s = 0;
  for (const auto& x : v) {
    s = Dom::sign_of(x);
    if (s != 0) break;
  }
  if (s < 0)
    for (auto& x : v) x = Dom::sub(Dom::zero(), x);
}

}  // namespace detail

template <class K>
int rank(const Mat<K>& m) {
  using Dom = typename detail::domain_for<K>::type;
  auto rows = detail::clear_matrix<Dom, K>(m);
  auto e = detail::ffgj<Dom>(std::move(rows), m.cols);
  return static_cast<int>(e.pivot_col.size());
}

/// Basis of the right kernel {x : M x = 0}, computed fraction-free.
/// Vectors come out with cleared denominators, content 1, first nonzero
/// entry positive, ordered by ascending free column.
template <class K>
std::vector<std::vector<K>> nullspace(const Mat<K>& m) {
  using Dom = typename detail::domain_for<K>::type;
  using D = typename Dom::D;
  auto rows = detail::clear_matrix<Dom, K>(m);
  auto e = detail::ffgj<Dom>(std::move(rows), m.cols);
  const int npiv = static_cast<int>(e.pivot_col.size());
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;

  std::vector<std::vector<K>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<D> v(m.cols, Dom::zero());
    v[f] = e.denom;
    for (int i = 0; i < npiv; ++i)
      v[e.pivot_col[i]] = Dom::sub(Dom::zero(), e.rows[i][f]);
    detail::normalize_vector<Dom>(v);
    std::vector<K> kv;
    kv.reserve(m.cols);
    for (const auto& x : v) kv.push_back(Dom::to_field(x));
    out.push_back(std::move(kv));
  }

  // The kernel is the contract of everything downstream; check it hard.
  for (const auto& v : out)
    for (int i = 0; i < m.rows; ++i) {
      K acc = K::zero();
      for (int j = 0; j < m.cols; ++j) acc = acc + m.at(i, j) * v[j];
      if (!acc.is_zero()) throw InternalError("nullspace verification failed");
    }
  return out;
}

/// Row span with exact membership tests and coordinate recovery relative to
/// the originally inserted vectors.
template <class K>
class LinearSpan {
  using Dom = typename detail::domain_for<K>::type;
  using D = typename Dom::D;

 public:
  LinearSpan() = default;
  explicit LinearSpan(const std::vector<std::vector<K>>& vectors) {
    if (vectors.empty()) return;
    n_ = static_cast<int>(vectors[0].size());
    basis_ = vectors;
    // Augment with the identity to track expressions in the input vectors.
    std::vector<std::vector<D>> rows;
    const int k = static_cast<int>(vectors.size());
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(vectors[i].size()) != n_)
        throw InvariantError("span vectors of unequal length");
      std::vector<K> aug(vectors[i]);
      for (int j = 0; j < k; ++j) aug.push_back(i == j ? K::one() : K::zero());
      rows.push_back(Dom::clear_row(aug));
    }
    ech_ = detail::ffgj<Dom>(std::move(rows), n_);
  }

  int dim() const { return static_cast<int>(ech_.pivot_col.size()); }
  int ambient() const { return n_; }

  bool contains(const std::vector<K>& q) const { return static_cast<bool>(coords(q)); }

  // Coefficients c with sum c_i * input_i == q, if q lies in the span.
  std::optional<std::vector<K>> coords(const std::vector<K>& q) const {
    if (static_cast<int>(q.size()) != n_) throw InvariantError("span query arity mismatch");
    const int k = static_cast<int>(basis_.size());
    std::vector<K> mu(dim(), K::zero());
    // Jordan form: q must be sum over pivots of q[c_i]/denom * row_i.
    const K den = Dom::to_field(ech_.denom);
    for (int i = 0; i < dim(); ++i) mu[i] = q[ech_.pivot_col[i]] / den;
    std::vector<K> residual(q);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < n_; ++j)
        residual[j] = residual[j] - mu[i] * Dom::to_field(ech_.rows[i][j]);
    for (const auto& x : residual)
      if (!x.is_zero()) return std::nullopt;
    std::vector<K> out(k, K::zero());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < k; ++j)
        out[j] = out[j] + mu[i] * Dom::to_field(ech_.rows[i][n_ + j]);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<K>> basis_;
  detail::Echelon<Dom> ech_;
};

}  // namespace fiberfield

#endif
