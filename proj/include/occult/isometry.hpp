// Finite-order isometries: validation, orders, reflections and Coxeter
// elements, cyclotomic eigenstructure, fixed sublattices, the induced
// action on the discriminant group, targeted isometry search, period
// domain dimensions and orthogonal groups of small discriminant forms.

#ifndef OCCULT_ISOMETRY_HPP_
#define OCCULT_ISOMETRY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discriminant.hpp"
#include "embedding.hpp"

namespace occult {

struct Isometry {
  Lattice lattice;
  IntMatrix matrix;  // columns: images of basis vectors

  std::size_t rank() const { return lattice.rank(); }
};

inline Isometry verify_isometry(const Lattice& L, const IntMatrix& g) {
  if (g.rows() != L.rank() || g.cols() != L.rank()) fail("isometry matrix has the wrong size");
  if (g.transpose() * L.gram() * g != L.gram()) fail("matrix does not preserve the Gram matrix");
  Integer det = determinant(g);
  if (det != 1 && det != -1) fail("isometry determinant is not +-1");
  return {L, g};
}

inline Isometry identity_isometry(const Lattice& L) { return {L, IntMatrix::identity(L.rank())}; }

inline Isometry compose(const Isometry& g, const Isometry& h) {
  if (!(g.lattice == h.lattice)) fail("composing isometries of different lattices");
  return {g.lattice, g.matrix * h.matrix};
}

inline Isometry power(const Isometry& g, unsigned k) {
  IntMatrix acc = IntMatrix::identity(g.rank());
  IntMatrix base = g.matrix;
  while (k) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return {g.lattice, acc};
}

// g^{-1} = G^{-1} g^T G.
inline Isometry inverse(const Isometry& g) {
  RatMatrix gi = inverse(g.lattice.gram()) * to_rational(g.matrix.transpose() * g.lattice.gram());
  return {g.lattice, to_integer(gi)};
}

// Block-diagonal isometry of an orthogonal sum.
inline Isometry direct_sum(const std::vector<Isometry>& parts) {
  std::vector<Lattice> lats;
  for (const auto& p : parts) lats.push_back(p.lattice);
  Lattice L = direct_sum(lats);
  IntMatrix m(L.rank(), L.rank());
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) m(off + i, off + j) = p.matrix(i, j);
    off += p.rank();
  }
  return {L, m};
}

inline constexpr unsigned kDefaultOrderCutoff = 1000;

inline std::optional<unsigned> order_of(const Isometry& g, unsigned cutoff = kDefaultOrderCutoff) {
  const IntMatrix id = IntMatrix::identity(g.rank());
  IntMatrix acc = g.matrix;
  for (unsigned k = 1; k <= cutoff; ++k) {
    if (acc == id) return k;
    acc = acc * g.matrix;
  }
  return std::nullopt;
}

// s_v(x) = x - (2 (x,v) / (v,v)) v for a vector of norm +-2.
inline Isometry reflection(const Lattice& L, const IntVector& v) {
  if (v.size() != L.rank()) fail("reflection vector has the wrong length");
  Integer nrm = L.norm(v);
  if (nrm != 2 && nrm != -2) fail("reflection vector must have norm +-2, got " + nrm.get_str());
  const Integer scale = nrm == 2 ? Integer(1) : Integer(-1);  // 2 / (v,v)
  IntVector gv = L.gram() * v;
  IntMatrix m = IntMatrix::identity(L.rank());
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = 0; j < L.rank(); ++j) m(i, j) -= scale * v[i] * gv[j];
  return {L, m};
}

// True if +-gram is the Cartan matrix of a union of ADE diagrams.
inline bool is_root_lattice_basis(const Lattice& L) {
  if (L.rank() == 0) return false;
  const Integer sign = L.gram()(0, 0) > 0 ? Integer(1) : Integer(-1);
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = 0; j < L.rank(); ++j) {
      Integer v = sign * L.gram()(i, j);
      if (i == j ? v != 2 : (v != 0 && v != -1)) return false;
    }
  auto sig = signature(L);
  return sign > 0 ? sig.neg == 0 : sig.pos == 0;
}

// Product s_1 s_2 ... s_n of the simple reflections (s_n applied first).
inline Isometry coxeter_element(const Lattice& L) {
  if (!is_root_lattice_basis(L)) fail("coxeter_element needs an ADE root lattice in its simple-root basis");
  IntMatrix c = IntMatrix::identity(L.rank());
  for (std::size_t i = 0; i < L.rank(); ++i) {
    IntVector e(L.rank(), Integer(0));
    e[i] = 1;
    c = c * reflection(L, e).matrix;
  }
  return {L, c};
}

// ---------------------------------------------------------------------------
// Characteristic polynomials and cyclotomic data. Polynomials are stored
// lowest degree first.

using Polynomial = std::vector<Integer>;

// Berkowitz's division-free algorithm; returns det(xI - A).
inline Polynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.square()) fail("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> poly{1};  // highest degree first while building
  for (std::size_t r = 0; r < n; ++r) {
    // t = [1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S]
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<Integer> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer rs = 0;
      for (std::size_t i = 0; i < r; ++i) rs += a(r, i) * s[i];
      t[k + 2] = -rs;
      std::vector<Integer> ms(r, Integer(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) ms[i] += a(i, j) * s[j];
      s = std::move(ms);
    }
    std::vector<Integer> next(r + 2, Integer(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * poly[j];
    poly = std::move(next);
  }
  return Polynomial(poly.rbegin(), poly.rend());
}

// Exact division of polynomials with integer coefficients (monic divisor).
inline Polynomial poly_divide_exact(Polynomial num, const Polynomial& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) fail("polynomial division: degree too small");
  Polynomial q(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i] / den[dn];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) fail("polynomial division is not exact");
  return q;
}

inline Polynomial cyclotomic_polynomial(unsigned k) {
  Polynomial p(k + 1, Integer(0));
  p[0] = -1;
  p[k] = 1;
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

inline IntMatrix evaluate(const Polynomial& p, const IntMatrix& a) {
  IntMatrix acc(a.rows(), a.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) += p[i];
  }
  return acc;
}

struct CyclotomicProfile {
  std::map<unsigned, unsigned> multiplicities;  // k -> m_k, zero entries omitted

  unsigned m(unsigned k) const {
    auto it = multiplicities.find(k);
    return it == multiplicities.end() ? 0 : it->second;
  }
  std::size_t total_rank() const {
    std::size_t s = 0;
    for (auto [k, mk] : multiplicities) s += std::size_t(mk) * totient(k);
    return s;
  }
  std::string str() const {
    std::string s = "{";
    for (auto [k, mk] : multiplicities) {
      if (s.size() > 1) s += ",";
      s += "m" + std::to_string(k) + "=" + std::to_string(mk);
    }
    return s + "}";
  }
  friend bool operator==(const CyclotomicProfile&, const CyclotomicProfile&) = default;

  static CyclotomicProfile of(std::initializer_list<std::pair<const unsigned, unsigned>> init) {
    CyclotomicProfile p;
    for (auto [k, mk] : init)
      if (mk) p.multiplicities[k] = mk;
    return p;
  }
};

// m_k = dim ker Phi_k(g) / phi(k) for each k dividing the order of g.
inline CyclotomicProfile cyclotomic_profile(const Isometry& g, unsigned cutoff = kDefaultOrderCutoff) {
  auto ord = order_of(g, cutoff);
  if (!ord) fail("cyclotomic_profile needs an isometry of finite order (cutoff " + std::to_string(cutoff) + ")");
  CyclotomicProfile p;
  for (unsigned k = 1; k <= *ord; ++k) {
    if (*ord % k) continue;
    std::size_t nullity = g.rank() - rank_of(evaluate(cyclotomic_polynomial(k), g.matrix));
    if (nullity % totient(k)) fail("internal error: kernel dimension not divisible by phi(k)");
    if (nullity) p.multiplicities[k] = unsigned(nullity / totient(k));
  }
  if (p.total_rank() != g.rank()) fail("internal error: cyclotomic multiplicities do not add up to the rank");
  return p;
}

struct FixedSublattice {
  std::optional<Lattice> lattice;  // empty: the fixed sublattice is zero
  IntMatrix basis;
};

inline FixedSublattice fixed_sublattice(const Isometry& g) {
  IntMatrix k = integer_kernel(g.matrix - IntMatrix::identity(g.rank()));
  FixedSublattice out;
  out.basis = k;
  if (k.cols() > 0) out.lattice = Lattice(k.transpose() * g.lattice.gram() * k);
  return out;
}

// ---------------------------------------------------------------------------
// Action on the discriminant group.

// Column i holds the coordinates of g(x_i) for the generators x_i of L^v/L.
inline std::vector<std::vector<Integer>> disc_action(const Isometry& g) {
  DualQuotient dq(g.lattice);
  std::vector<std::vector<Integer>> cols;
  RatMatrix gm = to_rational(g.matrix);
  for (std::size_t i = 0; i < dq.size(); ++i) cols.push_back(dq.coordinates(gm * dq.generator(i)));
  return cols;
}

inline bool disc_action_trivial(const Isometry& g) {
  auto cols = disc_action(g);
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols[i].size(); ++j)
      if (cols[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Period domains.

// A mu_n action on an ambient lattice: its cyclotomic profile and the rank of
// the invariant sublattice L (whose complement carries the period).
struct MuActionDatum {
  unsigned n = 0;
  CyclotomicProfile profile;
  std::size_t invariant_rank = 0;

  void validate() const {
    if (n < 2) fail("mu_n datum needs n >= 2");
    if (profile.m(1) != invariant_rank) fail("m_1 must equal the rank of the invariant lattice");
    for (auto [k, mk] : profile.multiplicities)
      if (n % k) fail("profile has a cyclotomic factor Phi_" + std::to_string(k) + " not dividing n");
    if (profile.m(n) == 0) fail("the faithful character has multiplicity zero");
  }
  std::size_t complement_rank() const { return profile.total_rank() - invariant_rank; }
};

// n >= 3: complex ball of dimension m_n - 1. n = 2: type IV domain of a
// signature (2, k) lattice, of dimension k = rank - 2.
inline std::size_t ball_dimension(const MuActionDatum& d) {
  d.validate();
  if (d.n >= 3) return d.profile.m(d.n) - 1;
  if (d.complement_rank() < 2) fail("type IV domain needs a complement of rank at least 2");
  return d.complement_rank() - 2;
}

// ---------------------------------------------------------------------------
// Targeted isometry search on definite lattices.

struct ProfileSearchLimits {
  std::size_t rank_cap = 8;
  unsigned order_cutoff = kDefaultOrderCutoff;
};

namespace detail {

// For a profile concentrated on one k with k in {1,2,3,4,6}, g + g^{-1}
// equals the scalar 2cos(2 pi / k); returns it.
inline std::optional<long> pure_trace_scalar(const CyclotomicProfile& p) {
  if (p.multiplicities.size() != 1) return std::nullopt;
  switch (p.multiplicities.begin()->first) {
    case 1: return 2;
    case 2: return -2;
    case 3: return -1;
    case 4: return 0;
    case 6: return 1;
    default: return std::nullopt;
  }
}

}  // namespace detail

// Backtracking over short-vector images of an LLL-reduced basis. The search
// is exhaustive; for profiles concentrated on one k in {1,2,3,4,6} the
// relation (b_i, g b_j) + (g b_i, b_j) = s (b_i, b_j), with s the scalar
// value of g + g^{-1}, prunes partial assignments.
inline std::optional<Isometry> find_isometry_with_profile(const Lattice& L, const CyclotomicProfile& target,
                                                          const ProfileSearchLimits& limits = {}) {
  auto sig = signature(L);
  if (!sig.definite()) fail("find_isometry_with_profile needs a definite lattice");
  if (L.rank() > limits.rank_cap)
    fail("find_isometry_with_profile: rank exceeds the configured cap " + std::to_string(limits.rank_cap));
  if (target.total_rank() != L.rank()) return std::nullopt;
  Lattice pos = sig.pos == 0 ? twist(L, -1) : L;
  auto red = detail::sorted_reduction(pos);
  const Lattice& R = red.reduced;
  detail::DefiniteMatcher matcher(R, R);
  if (auto s = detail::pure_trace_scalar(target)) {
    const Integer scalar = *s;
    matcher.pairwise = [&R, scalar](std::size_t k, const std::vector<IntVector>& imgs) {
      IntVector gk = R.gram() * imgs[k];
      for (std::size_t i = 0; i <= k; ++i) {
        IntVector gi = R.gram() * imgs[i];
        if (gk[i] + gi[k] != scalar * R.gram()(i, k)) return false;
      }
      return true;
    };
  }
  auto found = matcher.run([&](const IntMatrix& g) {
    Isometry iso{R, g};
    auto ord = order_of(iso, limits.order_cutoff);
    return ord && cyclotomic_profile(iso, limits.order_cutoff) == target;
  });
  if (!found) return std::nullopt;
  IntMatrix g = red.transform * *found * unimodular_inverse(red.transform);
  return verify_isometry(L, g);
}

// ---------------------------------------------------------------------------
// Orthogonal groups of elementary abelian discriminant forms.

struct FiniteGroupCaps {
  unsigned max_prime = 5;
  std::size_t max_dim = 4;
};

// |O(q)| for q on (Z/p)^k: the number of invertible k x k matrices over F_p
// preserving q and b, counted by exhaustive column-by-column search.
inline std::int64_t orthogonal_group_order_mod_p(const DiscriminantForm& q, const FiniteGroupCaps& caps = {}) {
  const auto& f = q.group.invariant_factors;
  if (f.empty()) return 1;
  const Integer p = f.front();
  for (const auto& d : f)
    if (d != p) fail("orthogonal_group_order_mod_p needs an elementary abelian group");
  if (!p.fits_ulong_p() || !is_prime_small(unsigned(p.get_ui())))
    fail("orthogonal_group_order_mod_p: group exponent " + p.get_str() + " is not prime");
  if (p.get_ui() > caps.max_prime || f.size() > caps.max_dim)
    throw BoundExceeded("orthogonal_group_order_mod_p: (Z/" + p.get_str() + ")^" + std::to_string(f.size()) +
                        " exceeds the brute-force caps");
  return form_automorphism_count(q, std::numeric_limits<long>::max());
}

}  // namespace occult

#endif  // OCCULT_ISOMETRY_HPP_
