// Discriminant groups L^v / L, discriminant quadratic forms, and an
// isomorphism search for finite quadratic forms.

#ifndef OCCULT_DISCRIMINANT_HPP_
#define OCCULT_DISCRIMINANT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "normal_forms.hpp"

namespace occult {

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // each > 1, d_i | d_{i+1}

  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
  bool trivial() const { return invariant_factors.empty(); }
  std::string str() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    std::size_t i = 0;
    while (i < invariant_factors.size()) {
      std::size_t j = i;
      while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
      if (!s.empty()) s += "+";
      s += "Z/" + invariant_factors[i].get_str();
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }
  friend bool operator==(const DiscriminantGroup&, const DiscriminantGroup&) = default;
};

// Coordinates on L^v / L derived from the Smith form left * G * right = D.
// The generator attached to a factor d_i > 1 is the dual vector
// right[:, i] / d_i; a dual vector x has coordinates left * (G x) mod d.
class DualQuotient {
 public:
  explicit DualQuotient(const Lattice& L) : gram_(L.gram()), snf_(smith_normal_form(L.gram())) {
    for (std::size_t i = 0; i < snf_.diag.size(); ++i)
      if (snf_.diag[i] != 1) active_.push_back(i);
  }

  std::size_t size() const { return active_.size(); }
  const Integer& factor(std::size_t k) const { return snf_.diag[active_[k]]; }

  DiscriminantGroup group() const {
    DiscriminantGroup g;
    for (std::size_t k = 0; k < size(); ++k) g.invariant_factors.push_back(factor(k));
    return g;
  }

  RatVector generator(std::size_t k) const {
    const std::size_t col = active_[k];
    RatVector x(gram_.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = make_rational(snf_.right(i, col), factor(k));
    return x;
  }

  // Coordinates of a dual vector (given in lattice-basis coordinates).
  std::vector<Integer> coordinates(const RatVector& x) const {
    const std::size_t n = gram_.rows();
    IntVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Rational(gram_(i, j)) * x[j];
      if (!is_integral(s)) fail("vector is not in the dual lattice");
      y[i] = s.get_num();
    }
    std::vector<Integer> out(size());
    for (std::size_t k = 0; k < size(); ++k) {
      Integer c = 0;
      const std::size_t row = active_[k];
      for (std::size_t j = 0; j < n; ++j) c += snf_.left(row, j) * y[j];
      out[k] = mod_floor(c, factor(k));
    }
    return out;
  }

 private:
  IntMatrix gram_;
  SNFDecomposition snf_;
  std::vector<std::size_t> active_;
};

inline DiscriminantGroup discriminant_group(const Lattice& L) { return DualQuotient(L).group(); }

// q values live in Q/2Z (representatives in [0,2)), b values in Q/Z
// (representatives in [0,1)). Generators are ordered by invariant factor.
struct DiscriminantForm {
  DiscriminantGroup group;
  std::vector<Rational> q_values;
  RatMatrix b_matrix;
  bool has_q = true;  // false for odd lattices: only b is meaningful

  std::size_t size() const { return group.invariant_factors.size(); }

  DiscriminantForm negated() const {
    DiscriminantForm out = *this;
    for (auto& q : out.q_values) q = mod_rational(-q, 2);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out.b_matrix(i, j) = mod_rational(-b_matrix(i, j), 1);
    return out;
  }

  std::string str() const {
    std::string s = group.str() + " q=[";
    for (std::size_t i = 0; i < q_values.size(); ++i) s += (i ? "," : "") + q_values[i].get_str();
    return s + "]";
  }
};

inline DiscriminantForm discriminant_form_unchecked(const Lattice& L) {
  DualQuotient dq(L);
  DiscriminantForm f;
  f.group = dq.group();
  f.has_q = is_even(L);
  const std::size_t k = dq.size();
  RatMatrix g = to_rational(L.gram());
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(dq.generator(i));
  f.b_matrix = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    f.q_values.push_back(mod_rational(bilinear(g, gens[i], gens[i]), 2));
    for (std::size_t j = 0; j < k; ++j) f.b_matrix(i, j) = mod_rational(bilinear(g, gens[i], gens[j]), 1);
  }
  return f;
}

inline DiscriminantForm discriminant_form(const Lattice& L) {
  if (!is_even(L)) fail("discriminant quadratic form requires an even lattice");
  return discriminant_form_unchecked(L);
}

// ---------------------------------------------------------------------------
// Small-integer model of a finite quadratic form. With e the exponent of
// the group, Q = e*q mod 2e and B = e*b mod e are integers.

class FiniteFormTable {
 public:
  explicit FiniteFormTable(const DiscriminantForm& f) : use_q_(f.has_q) {
    const std::size_t k = f.size();
    exponent_ = 1;
    for (const auto& d : f.group.invariant_factors) {
      factors_.push_back(to_int64(d));
      exponent_ = std::lcm(exponent_, factors_.back());
    }
    order_ = 1;
    for (auto d : factors_) order_ *= d;
    q_.resize(k);
    b_.assign(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      q_[i] = to_int64(to_integer(f.q_values[i] * Rational(exponent_)));
      q_[i] = ((q_[i] % (2 * exponent_)) + 2 * exponent_) % (2 * exponent_);
      for (std::size_t j = 0; j < k; ++j) {
        auto v = to_int64(to_integer(f.b_matrix(i, j) * Rational(exponent_)));
        b_[i][j] = ((v % exponent_) + exponent_) % exponent_;
      }
    }
  }

  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  bool uses_q() const { return use_q_; }

  std::vector<std::int64_t> coords(std::int64_t index) const {
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = rank(); i-- > 0;) {
      c[i] = index % factors_[i];
      index /= factors_[i];
    }
    return c;
  }
  std::int64_t index(const std::vector<std::int64_t>& c) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * factors_[i] + c[i];
    return idx;
  }
  std::int64_t add(std::int64_t x, std::int64_t y) const {
    auto a = coords(x), b = coords(y);
    for (std::size_t i = 0; i < rank(); ++i) a[i] = (a[i] + b[i]) % factors_[i];
    return index(a);
  }
  std::int64_t element_order(std::int64_t x) const {
    auto c = coords(x);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < rank(); ++i) o = std::lcm(o, factors_[i] / std::gcd(c[i], factors_[i]));
    return o;
  }
  std::int64_t q_of(const std::vector<std::int64_t>& c) const {
    const std::int64_t m = 2 * exponent_;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (c[i] == 0) continue;
      acc = (acc + (c[i] * c[i] % m) * q_[i]) % m;
      for (std::size_t j = i + 1; j < rank(); ++j)
        acc = (acc + 2 * ((c[i] * c[j]) % m) * b_[i][j]) % m;
    }
    return acc;
  }
  std::int64_t b_of(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        acc = (acc + (x[i] * y[j] % exponent_) * b_[i][j]) % exponent_;
    }
    return acc;
  }
  std::int64_t generator_q(std::size_t i) const { return q_[i]; }
  std::int64_t generator_b(std::size_t i, std::size_t j) const { return b_[i][j]; }

 private:
  bool use_q_;
  std::int64_t exponent_ = 1;
  std::int64_t order_ = 1;
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> q_;
  std::vector<std::vector<std::int64_t>> b_;
};

// Enumerates isomorphisms source -> target of finite quadratic forms by
// choosing images of the source generators one at a time. Candidates are
// target elements of the right order, q value and pairings with earlier
// images; the span of the chosen images is tracked so that only injective
// assignments survive. `visit` receives the image indices and returns false
// to stop the search.
class FormMatcher {
 public:
  FormMatcher(const DiscriminantForm& source, const DiscriminantForm& target)
      : src_(source), dst_(target) {}

  bool compatible_shapes() const { return src_.factors() == dst_.factors(); }

  void run(const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (!compatible_shapes()) return;
    const std::size_t k = src_.rank();
    const std::int64_t n = dst_.order();
    elem_coords_.resize(std::size_t(n));
    elem_q_.resize(std::size_t(n));
    elem_order_.resize(std::size_t(n));
    for (std::int64_t x = 0; x < n; ++x) {
      elem_coords_[x] = dst_.coords(x);
      elem_q_[x] = dst_.q_of(elem_coords_[x]);
      elem_order_[x] = dst_.element_order(x);
    }
    in_span_.assign(std::size_t(n), 0);
    span_ = {0};
    in_span_[0] = 1;
    images_.assign(k, -1);
    stop_ = false;
    visit_ = &visit;
    descend(0);
  }

 private:
  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == src_.rank()) {
      if (!(*visit_)(images_)) stop_ = true;
      return;
    }
    const std::int64_t want_order = src_.factors()[depth];
    const std::int64_t n = dst_.order();
    for (std::int64_t h = 0; h < n && !stop_; ++h) {
      if (elem_order_[h] != want_order) continue;
      if (src_.uses_q() && elem_q_[h] != src_.generator_q(depth)) continue;
      if (!src_.uses_q() &&
          dst_.b_of(elem_coords_[h], elem_coords_[h]) != src_.generator_b(depth, depth))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i)
        ok = dst_.b_of(elem_coords_[images_[i]], elem_coords_[h]) == src_.generator_b(i, depth);
      if (!ok) continue;
      const std::size_t mark = span_.size();
      if (!extend_span(h, want_order)) {
        rollback(mark);
        continue;
      }
      images_[depth] = h;
      descend(depth + 1);
      rollback(mark);
    }
  }

  bool extend_span(std::int64_t h, std::int64_t ord) {
    const std::size_t base = span_.size();
    std::int64_t multiple = 0;
    for (std::int64_t c = 1; c < ord; ++c) {
      multiple = dst_.add(multiple, h);
      for (std::size_t s = 0; s < base; ++s) {
        std::int64_t e = dst_.add(span_[s], multiple);
        if (in_span_[e]) return false;
        in_span_[e] = 1;
        span_.push_back(e);
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    for (std::size_t i = mark; i < span_.size(); ++i) in_span_[span_[i]] = 0;
    span_.resize(mark);
  }

  FiniteFormTable src_;
  FiniteFormTable dst_;
  std::vector<std::vector<std::int64_t>> elem_coords_;
  std::vector<std::int64_t> elem_q_;
  std::vector<std::int64_t> elem_order_;
  std::vector<char> in_span_;
  std::vector<std::int64_t> span_;
  std::vector<std::int64_t> images_;
  bool stop_ = false;
  const std::function<bool(const std::vector<std::int64_t>&)>* visit_ = nullptr;
};

inline constexpr long kDefaultDiscFormBound = 10000;

// Decides whether two finite quadratic forms are isomorphic by search.
// Groups larger than `bound` raise BoundExceeded instead of answering.
inline bool disc_forms_equivalent(const DiscriminantForm& a, const DiscriminantForm& b,
                                  long bound = kDefaultDiscFormBound) {
  if (a.group.order() > bound || b.group.order() > bound)
    throw BoundExceeded("discriminant group order exceeds the equivalence search bound " +
                        std::to_string(bound));
  if (a.group != b.group) return false;
  if (a.has_q != b.has_q) return false;
  FormMatcher matcher(a, b);
  bool found = false;
  matcher.run([&](const std::vector<std::int64_t>&) {
    found = true;
    return false;
  });
  return found;
}

// Number of automorphisms of a finite quadratic form (counted by the same
// search, run to completion).
inline std::int64_t form_automorphism_count(const DiscriminantForm& f, long bound = kDefaultDiscFormBound) {
  if (f.group.order() > bound)
    throw BoundExceeded("discriminant group order exceeds the search bound " + std::to_string(bound));
  FormMatcher matcher(f, f);
  std::int64_t count = 0;
  matcher.run([&](const std::vector<std::int64_t>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace occult

#endif  // OCCULT_DISCRIMINANT_HPP_
