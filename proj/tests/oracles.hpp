// Independent reference computations used by the tests. These take the
// slow, obvious route on purpose and share no code paths with the library
// beyond the Matrix/Lattice containers.

#ifndef OCCULT_TESTS_ORACLES_HPP_
#define OCCULT_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "occult/occult.hpp"

namespace oracle {

using namespace occult;

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 30) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (rng() & 1u) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
  }
  if (rng() & 1u)
    for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
  return u;
}

inline Lattice scramble(const Lattice& L, const IntMatrix& u) {
  return Lattice(u.transpose() * L.gram() * u, L.label());
}

// Positive definite lattice B^T B with a random nonsingular integer B.
inline Lattice random_positive_definite(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  for (;;) {
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = e(rng);
    if (determinant(b) == 0) continue;
    return Lattice(b.transpose() * b);
  }
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

// Signature by sign changes along the leading principal minors
// 1, D_1, ..., D_n (Jacobi). Requires every D_k != 0.
inline std::optional<Signature> leading_minor_signature(const IntMatrix& g) {
  const std::size_t n = g.rows();
  Integer prev = 1;
  Signature s;
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
    Integer d = determinant(sub);
    if (d == 0) return std::nullopt;
    if ((d > 0) == (prev > 0))
      ++s.pos;
    else
      ++s.neg;
    prev = d;
  }
  return s;
}

inline void canonical_sign(IntVector& v) {
  for (auto& x : v)
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      return;
    }
}

// Every v with 0 < (v,v) <= bound, by walking the full coordinate box
// |x_i| <= sqrt(bound * (G^{-1})_{ii}).
inline std::set<IntVector> naive_short_vectors(const Lattice& L, long bound) {
  const std::size_t n = L.rank();
  RatMatrix inv = inverse(L.gram());
  std::vector<long> lim(n);
  for (std::size_t i = 0; i < n; ++i) lim[i] = long(std::floor(std::sqrt(double(bound) * inv(i, i).get_d()))) + 1;
  std::set<IntVector> out;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -lim[i];
  for (;;) {
    IntVector v(x.begin(), x.end());
    Integer nrm = L.norm(v);
    if (nrm > 0 && nrm <= bound) {
      canonical_sign(v);
      out.insert(v);
    }
    std::size_t i = 0;
    while (i < n && x[i] == lim[i]) {
      x[i] = -lim[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Quadratic and bilinear values on (Z/p)^k from a discriminant form with
// generators g_i: q(x) = sum x_i^2 q_i + 2 sum_{i<j} x_i x_j b_ij mod 2.
inline Rational form_q(const DiscriminantForm& f, const std::vector<long>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += Rational(x[i] * x[i]) * f.q_values[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) s += Rational(2 * x[i] * x[j]) * f.b_matrix(i, j);
  }
  return mod_rational(s, 2);
}

inline Rational form_b(const DiscriminantForm& f, const std::vector<long>& x, const std::vector<long>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i] * y[j]) * f.b_matrix(i, j);
  return mod_rational(s, 1);
}

inline long det_mod_p(std::vector<std::vector<long>> a, long p) {
  const std::size_t n = a.size();
  long det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det = det * a[c][c] % p;
    long inv = 1;
    for (long t = 1; t < p; ++t)
      if ((a[c][c] % p + p) % p * t % p == 1) inv = t;
    for (std::size_t r = c + 1; r < n; ++r) {
      long f = (a[r][c] % p + p) % p * inv % p;
      for (std::size_t k = c; k < n; ++k) a[r][k] = ((a[r][k] - f * a[c][k]) % p + p) % p;
    }
  }
  return (det % p + p) % p;
}

// |O(q)| for q on (Z/p)^k by running over every k x k matrix over F_p whose
// columns already have the right q-values, keeping the invertible ones that
// preserve b on every pair of columns.
inline std::int64_t brute_force_orthogonal_order(const DiscriminantForm& f) {
  const std::size_t k = f.size();
  if (k == 0) return 1;
  const long p = f.group.invariant_factors.front().get_si();
  std::vector<std::vector<long>> all;
  std::vector<long> x(k, 0);
  for (;;) {
    all.push_back(x);
    std::size_t i = 0;
    while (i < k && x[i] == p - 1) x[i++] = 0;
    if (i == k) break;
    ++x[i];
  }
  std::vector<std::vector<std::vector<long>>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long> e(k, 0);
    e[i] = 1;
    for (const auto& v : all)
      if (form_q(f, v) == form_q(f, e)) cand[i].push_back(v);
  }
  std::int64_t count = 0;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j) ok = form_b(f, cand[i][idx[i]], cand[j][idx[j]]) == f.b_matrix(i, j);
    if (ok) {
      std::vector<std::vector<long>> m(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[j][i] = cand[i][idx[i]][j];
      if (det_mod_p(m, p) != 0) ++count;
    }
    std::size_t i = 0;
    while (i < k && idx[i] + 1 == cand[i].size()) idx[i++] = 0;
    if (i == k) break;
    ++idx[i];
  }
  return count;
}

}  // namespace oracle

#endif  // OCCULT_TESTS_ORACLES_HPP_
