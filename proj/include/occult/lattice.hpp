// Integral lattices given by Gram matrices: construction, catalog,
// twists, orthogonal sums, and the basic invariants.

#ifndef OCCULT_LATTICE_HPP_
#define OCCULT_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace occult {

struct Signature {
  std::size_t pos = 0;
  std::size_t neg = 0;

  std::size_t rank() const { return pos + neg; }
  bool definite() const { return pos == 0 || neg == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
  std::string str() const {
    return "(" + std::to_string(pos) + "," + std::to_string(neg) + ")";
  }
};

// A free Z-module with a symmetric nondegenerate integral pairing.
// The Gram matrix is validated once at construction and never mutated.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, std::string label = {})
      : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.square()) fail("Gram matrix is not square");
    if (!gram_.is_symmetric()) fail("Gram matrix is not symmetric");
    if (determinant(gram_) == 0) fail("Gram matrix is degenerate");
  }

  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  std::size_t rank() const { return gram_.rows(); }

  Integer pair(const IntVector& x, const IntVector& y) const { return bilinear(gram_, x, y); }
  Integer norm(const IntVector& x) const { return bilinear(gram_, x, x); }

  Lattice relabeled(std::string label) const {
    Lattice out = *this;
    out.label_ = std::move(label);
    return out;
  }

  // Structural equality: Gram matrices only.
  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string label_;
};

inline Integer determinant(const Lattice& L) { return determinant(L.gram()); }

inline Integer delta(const Lattice& L) { return abs_value(determinant(L)); }

inline bool is_even(const Lattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i)
    if (mpz_odd_p(L.gram()(i, i).get_mpz_t())) return false;
  return true;
}

// Congruence diagonalization over Q. A nonzero diagonal entry is used as
// pivot when available; otherwise an off-diagonal entry a_ij is moved to the
// diagonal by the substitution e_i <- e_i + e_j, which yields 2 a_ij there.
inline Signature signature(const Lattice& L) {
  const std::size_t n = L.rank();
  RatMatrix a = to_rational(L.gram());
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) { p = i; break; }
    if (p == n) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && a(i, j) != 0) { bi = i; bj = j; break; }
      }
      if (bi == n) fail("degenerate Gram matrix in signature computation");
      a.add_row(bi, bj, Rational(1));
      a.add_col(bi, bj, Rational(1));
      p = bi;
    }
    const Rational piv = a(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Rational f = -a(i, p) / piv;
      a.add_row(i, p, f);
      a.add_col(i, p, f);
    }
    done[p] = true;
    if (piv > 0) ++sig.pos; else ++sig.neg;
  }
  return sig;
}

// L(n): same module, pairing scaled by n.
inline Lattice twist(const Lattice& L, const Integer& n) {
  if (n == 0) fail("twist factor must be nonzero");
  std::string label = L.label().empty() ? std::string{} : L.label() + "(" + n.get_str() + ")";
  return Lattice(Integer(n) * L.gram(), label);
}

inline Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) fail("direct sum of an empty list");
  if (parts.size() == 1) return parts.front();
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, n);
  std::size_t off = 0;
  std::string label;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
    if (!label.empty()) label += "+";
    label += p.label().empty() ? "?" : p.label();
  }
  return Lattice(std::move(g), label);
}

inline Lattice power_sum(const Lattice& L, std::size_t copies) {
  return direct_sum(std::vector<Lattice>(copies, L));
}

// ---------------------------------------------------------------------------
// Catalog of standard lattices. Root lattices use positive definite Cartan
// Gram matrices (2 on the diagonal, -1 along Dynkin edges).

enum class CatalogName { U, One, Diag2d, A, D, E6, E8, V, K3 };

namespace detail {

inline IntMatrix cartan_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (auto [a, b] : edges) {
    g(a, b) = -1;
    g(b, a) = -1;
  }
  return g;
}

// Bourbaki labelling: chain 1-3-4-5-...-n with node 2 attached to node 4.
inline IntMatrix cartan_e(std::size_t n) {
  std::vector<std::pair<int, int>> edges{{0, 2}, {2, 3}, {1, 3}};
  for (std::size_t i = 3; i + 1 < n; ++i) edges.emplace_back(int(i), int(i + 1));
  return cartan_from_edges(n, edges);
}

// D_n = {x in Z^n : sum x even}, basis e_i - e_{i+1} (i < n), e_{n-1} + e_n.
// D_1 degenerates to the single vector 2 e_1.
inline IntMatrix gram_d(std::size_t n) {
  std::vector<std::vector<long>> basis;
  if (n == 1) {
    basis.push_back({2});
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<long> v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      basis.push_back(v);
    }
    std::vector<long> v(n, 0);
    v[n - 2] = 1;
    v[n - 1] = 1;
    basis.push_back(v);
  }
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += basis[i][k] * basis[j][k];
      g(i, j) = s;
    }
  return g;
}

}  // namespace detail

inline Lattice make_catalog(CatalogName name, std::optional<long> param = std::nullopt) {
  auto need = [&](const char* what) -> long {
    if (!param) fail(std::string("catalog lattice ") + what + " needs a parameter");
    if (*param < 1) fail(std::string("catalog parameter out of range for ") + what);
    return *param;
  };
  switch (name) {
    case CatalogName::U:
      return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
    case CatalogName::One:
      return Lattice(IntMatrix{{1}}, "<1>");
    case CatalogName::Diag2d: {
      long d = need("<2d>");
      return Lattice(IntMatrix{{2 * d}}, "<" + std::to_string(2 * d) + ">");
    }
    case CatalogName::A: {
      long n = need("A_n");
      std::vector<std::pair<int, int>> edges;
      for (long i = 0; i + 1 < n; ++i) edges.emplace_back(int(i), int(i + 1));
      return Lattice(detail::cartan_from_edges(std::size_t(n), edges), "A" + std::to_string(n));
    }
    case CatalogName::D: {
      long n = need("D_n");
      return Lattice(detail::gram_d(std::size_t(n)), "D" + std::to_string(n));
    }
    case CatalogName::E6:
      return Lattice(detail::cartan_e(6), "E6");
    case CatalogName::E8:
      return Lattice(detail::cartan_e(8), "E8");
    case CatalogName::V:
      return Lattice(IntMatrix{{2, 1}, {1, -2}}, "V");
    case CatalogName::K3: {
      Lattice u = make_catalog(CatalogName::U);
      Lattice e8m = twist(make_catalog(CatalogName::E8), -1);
      return direct_sum({u, u, u, e8m, e8m}).relabeled("LK3");
    }
  }
  fail("unknown catalog name");
}

inline std::optional<CatalogName> catalog_name_from_string(const std::string& s) {
  if (s == "U") return CatalogName::U;
  if (s == "One" || s == "<1>") return CatalogName::One;
  if (s == "Diag2d") return CatalogName::Diag2d;
  if (s == "A") return CatalogName::A;
  if (s == "D") return CatalogName::D;
  if (s == "E6") return CatalogName::E6;
  if (s == "E8") return CatalogName::E8;
  if (s == "V") return CatalogName::V;
  if (s == "LK3" || s == "K3") return CatalogName::K3;
  return std::nullopt;
}

inline Lattice k3_lattice() { return make_catalog(CatalogName::K3); }

// Gram content m = gcd({g_ii / 2} u {g_ij : i != j}) of an even lattice;
// every norm (v,v)/2 is a multiple of m.
inline Integer gram_content(const Lattice& L) {
  Integer m = 0;
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = i; j < L.rank(); ++j) {
      Integer v = (i == j) ? Integer(L.gram()(i, i) / 2) : L.gram()(i, j);
      m = gcd_of(m, v);
    }
  return m;
}

}  // namespace occult

#endif  // OCCULT_LATTICE_HPP_
