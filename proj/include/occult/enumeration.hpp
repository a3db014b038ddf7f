// Vector enumeration: LLL reduction, Fincke-Pohst short vectors for
// definite lattices, boxed enumeration for indefinite ones, and the
// degree invariant d(L).

#ifndef OCCULT_ENUMERATION_HPP_
#define OCCULT_ENUMERATION_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lattice.hpp"
#include "normal_forms.hpp"

namespace occult {

struct SearchBox {
  long bound = 6;
  explicit SearchBox(long b = 6) : bound(b) {
    if (b < 1) fail("search box bound must be at least 1");
  }
};

inline bool is_positive_definite(const Lattice& L) { return signature(L).neg == 0; }
inline bool is_negative_definite(const Lattice& L) { return signature(L).pos == 0; }

// ---------------------------------------------------------------------------
// LLL

struct LLLResult {
  Lattice reduced;
  IntMatrix transform;  // columns: reduced basis in original coordinates
};

namespace detail {

// Gram-Schmidt data from a Gram matrix: mu(i,j) for j < i and squared
// lengths bstar[i].
inline void gram_schmidt(const IntMatrix& g, RatMatrix& mu, std::vector<Rational>& bstar) {
  const std::size_t n = g.rows();
  mu = RatMatrix(n, n);
  bstar.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * bstar[k];
      mu(i, j) = s / bstar[j];
    }
    Rational s = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
    bstar[i] = s;
  }
}

// Replace basis vector k by b_k + f * b_j in both the Gram matrix and T.
inline void basis_add(IntMatrix& g, IntMatrix& t, std::size_t k, std::size_t j, const Integer& f) {
  if (f == 0) return;
  g.add_row(k, j, f);
  g.add_col(k, j, f);
  t.add_col(k, j, f);
}

inline void basis_swap(IntMatrix& g, IntMatrix& t, std::size_t a, std::size_t b) {
  g.swap_rows(a, b);
  g.swap_cols(a, b);
  t.swap_cols(a, b);
}

}  // namespace detail

// Exact LLL with delta = 3/4 on a positive definite Gram matrix.
inline LLLResult lll_reduce(const Lattice& L) {
  if (!is_positive_definite(L)) fail("LLL reduction needs a positive definite lattice");
  const std::size_t n = L.rank();
  IntMatrix g = L.gram();
  IntMatrix t = IntMatrix::identity(n);
  const Rational delta(3, 4);
  RatMatrix mu;
  std::vector<Rational> bstar;
  std::size_t k = 1;
  while (k < n) {
    detail::gram_schmidt(g, mu, bstar);
    for (std::size_t j = k; j-- > 0;) {
      Integer q = round_of(mu(k, j));
      if (q != 0) {
        detail::basis_add(g, t, k, j, Integer(-q));
        detail::gram_schmidt(g, mu, bstar);
      }
    }
    if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      ++k;
    } else {
      detail::basis_swap(g, t, k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {Lattice(g, L.label()), t};
}

// ---------------------------------------------------------------------------
// Short vectors

namespace detail {

inline void canonicalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

struct NormLexLess {
  const Lattice* L;
  bool operator()(const IntVector& a, const IntVector& b) const {
    Integer na = L->norm(a), nb = L->norm(b);
    if (na != nb) return na < nb;
    return a < b;
  }
};

// Fincke-Pohst on the LDL^T decomposition of a positive definite Gram
// matrix: x^T G x = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2.
class FinckePohst {
 public:
  FinckePohst(const IntMatrix& gram, const Integer& bound) : n_(gram.rows()), bound_(bound) {
    RatMatrix mu;
    gram_schmidt(gram, mu, d_);
    lower_ = mu;
  }

  template <class Visit>
  void run(Visit&& visit) {
    x_.assign(n_, Integer(0));
    if (n_ == 0) return;
    recurse(n_ - 1, Rational(bound_), visit);
  }

 private:
  template <class Visit>
  void recurse(std::size_t i, const Rational& budget, Visit& visit) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= lower_(j, i) * Rational(x_[j]);
    const double radius = std::sqrt(std::max(0.0, Rational(budget / d_[i]).get_d()));
    const double c = center.get_d();
    const long lo = static_cast<long>(std::floor(c - radius)) - 1;
    const long hi = static_cast<long>(std::ceil(c + radius)) + 1;
    for (long v = lo; v <= hi; ++v) {
      Rational diff = Rational(v) - center;
      Rational used = d_[i] * diff * diff;
      if (used > budget) continue;
      x_[i] = v;
      Rational rest = budget - used;
      if (i == 0) {
        bool zero = std::all_of(x_.begin(), x_.end(), [](const Integer& z) { return z == 0; });
        if (!zero) visit(x_);
      } else {
        recurse(i - 1, rest, visit);
      }
    }
    x_[i] = 0;
  }

  std::size_t n_;
  Integer bound_;
  RatMatrix lower_;
  std::vector<Rational> d_;
  IntVector x_;
};

}  // namespace detail

// All v with 0 < (v,v) <= bound, one per +-pair (first nonzero coordinate
// positive), sorted by norm then lexicographically.
inline std::vector<IntVector> short_vectors(const Lattice& L, const Integer& bound) {
  if (!is_positive_definite(L)) fail("short vector enumeration needs a positive definite lattice");
  auto red = lll_reduce(L);
  std::set<IntVector> found;
  detail::FinckePohst fp(red.reduced.gram(), bound);
  fp.run([&](const IntVector& x) {
    IntVector v = red.transform * x;
    detail::canonicalize_sign(v);
    found.insert(v);
  });
  std::vector<IntVector> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), detail::NormLexLess{&L});
  return out;
}

// Representatives plus their negatives, keeping the norm-then-lex order of
// the representatives.
inline std::vector<IntVector> with_negatives(const std::vector<IntVector>& reps) {
  std::vector<IntVector> out;
  out.reserve(2 * reps.size());
  for (const auto& v : reps) {
    out.push_back(v);
    IntVector w = v;
    for (auto& x : w) x = -x;
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boxed enumeration for arbitrary (possibly indefinite) lattices.

// Enumerates nonzero coefficient vectors in [-B, B]^n in sparse-first order:
// by support size, then support sets in lexicographic order, then values
// ordered 1, -1, 2, -2, ... in each coordinate. With `canonical` set only the
// representative with a positive first nonzero coordinate is produced.
class BoxEnumerator {
 public:
  BoxEnumerator(std::size_t n, long bound, bool canonical)
      : n_(n), bound_(bound), canonical_(canonical) {
    values_.clear();
    for (long v = 1; v <= bound_; ++v) {
      values_.push_back(v);
      values_.push_back(-v);
    }
  }

  bool next(std::vector<long>& out) {
    for (;;) {
      if (!started_) {
        if (n_ == 0) return false;
        started_ = true;
        support_size_ = 1;
        reset_support();
      } else if (!advance_values()) {
        if (!advance_support()) {
          if (++support_size_ > n_) return false;
          reset_support();
        } else {
          reset_values();
        }
      }
      out.assign(n_, 0);
      for (std::size_t i = 0; i < support_.size(); ++i) out[support_[i]] = value_at(i);
      return true;
    }
  }

 private:
  long value_at(std::size_t i) const {
    return values_[digits_[i] * ((canonical_ && i == 0) ? 2 : 1)];
  }
  std::size_t radix(std::size_t i) const {
    return (canonical_ && i == 0) ? std::size_t(bound_) : values_.size();
  }
  void reset_support() {
    support_.resize(support_size_);
    for (std::size_t i = 0; i < support_size_; ++i) support_[i] = i;
    reset_values();
  }
  void reset_values() { digits_.assign(support_size_, 0); }
  bool advance_values() {
    for (std::size_t i = support_size_; i-- > 0;) {
      if (++digits_[i] < radix(i)) return true;
      digits_[i] = 0;
    }
    return false;
  }
  bool advance_support() {
    const std::size_t k = support_size_;
    for (std::size_t i = k; i-- > 0;) {
      if (support_[i] < n_ - k + i) {
        ++support_[i];
        for (std::size_t j = i + 1; j < k; ++j) support_[j] = support_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  long bound_;
  bool canonical_;
  bool started_ = false;
  std::size_t support_size_ = 0;
  std::vector<std::size_t> support_;
  std::vector<std::size_t> digits_;
  std::vector<long> values_;
};

// Gram matrix in machine integers for the fast enumeration paths. Throws
// BoundExceeded if some norm inside the box could leave 62-bit range.
class SmallGram {
 public:
  SmallGram(const Lattice& L, long box) : n_(L.rank()), g_(n_ * n_) {
    Integer total = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        total += abs_value(L.gram()(i, j));
        g_[i * n_ + j] = to_int64(L.gram()(i, j));
      }
    Integer worst = total * Integer(box) * Integer(box);
    if (worst > Integer(1) << 62) throw BoundExceeded("box enumeration would overflow 64-bit norms");
  }
  long long pair(const std::vector<long>& x, const std::vector<long>& y) const {
    long long acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      long long row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += g_[i * n_ + j] * y[j];
      acc += x[i] * row;
    }
    return acc;
  }
  long long norm(const std::vector<long>& x) const { return pair(x, x); }

 private:
  std::size_t n_;
  std::vector<long long> g_;
};

inline long gcd_of_coords(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  return g;
}

inline IntVector to_int_vector(const std::vector<long>& v) { return IntVector(v.begin(), v.end()); }

// { (v,v)/2 : v primitive, (v,v) > 0, coefficients in the box }.
inline std::set<Integer> realized_degrees(const Lattice& L, const SearchBox& box) {
  if (!is_even(L)) fail("realized degrees need an even lattice");
  SmallGram g(L, box.bound);
  BoxEnumerator en(L.rank(), box.bound, true);
  std::set<Integer> out;
  std::vector<long> v;
  while (en.next(v)) {
    if (gcd_of_coords(v) != 1) continue;
    long long nrm = g.norm(v);
    if (nrm > 0) out.insert(Integer(static_cast<long>(nrm / 2)));
  }
  return out;
}

// First primitive vector of norm 2d in sparse-first box order.
inline std::optional<IntVector> degree_witness(const Lattice& L, const Integer& d, const SearchBox& box) {
  SmallGram g(L, box.bound);
  const long long target = 2 * to_int64(d);
  BoxEnumerator en(L.rank(), box.bound, true);
  std::vector<long> v;
  while (en.next(v))
    if (g.norm(v) == target && gcd_of_coords(v) == 1) return to_int_vector(v);
  return std::nullopt;
}

struct DegreeWitness {
  IntVector vector;
  Integer degree;
};

struct DValue {
  Integer gcd;                    // gcd of realized degrees; d(L) divides it
  Integer certified_lower_bound;  // Gram content; divides d(L)
  bool stabilized = false;
  std::vector<DegreeWitness> witnesses;  // vectors that lowered the running gcd

  bool exact() const { return gcd == certified_lower_bound; }
};

namespace detail {

inline Integer gcd_in_box(const Lattice& L, long bound, const Integer& floor_value,
                          std::vector<DegreeWitness>* witnesses) {
  SmallGram g(L, bound);
  BoxEnumerator en(L.rank(), bound, true);
  Integer running = 0;
  std::vector<long> v;
  while (en.next(v)) {
    long long nrm = g.norm(v);
    if (nrm <= 0 || gcd_of_coords(v) != 1) continue;
    Integer deg(static_cast<long>(nrm / 2));
    Integer next = gcd_of(running, deg);
    if (next != running) {
      running = next;
      if (witnesses) witnesses->push_back({to_int_vector(v), deg});
      // The content divides every degree, so the gcd cannot drop further.
      if (running == floor_value) break;
    }
  }
  return running;
}

}  // namespace detail

inline DValue d_value(const Lattice& L, const SearchBox& box, long window = 2) {
  if (!is_even(L)) fail("d(L) needs an even lattice");
  DValue out;
  out.certified_lower_bound = gram_content(L);
  out.gcd = detail::gcd_in_box(L, box.bound, out.certified_lower_bound, &out.witnesses);
  if (out.gcd == 0) fail("no primitive positive-norm vector inside the search box");
  if (out.exact()) {
    out.stabilized = true;
  } else {
    Integer wider = detail::gcd_in_box(L, box.bound + window, out.certified_lower_bound, nullptr);
    out.stabilized = (wider == out.gcd);
  }
  return out;
}

}  // namespace occult

#endif  // OCCULT_ENUMERATION_HPP_
