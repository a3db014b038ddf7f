// Lattice embeddings, orthogonal complements, and isomorphism tests.

#ifndef OCCULT_EMBEDDING_HPP_
#define OCCULT_EMBEDDING_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "discriminant.hpp"
#include "enumeration.hpp"

namespace occult {

// Columns of `matrix` are the images of the source basis in target
// coordinates.
struct EmbeddingMap {
  Lattice source;
  Lattice target;
  IntMatrix matrix;
};

inline void check_embedding_shape(const EmbeddingMap& e) {
  if (e.matrix.rows() != e.target.rank() || e.matrix.cols() != e.source.rank())
    fail("embedding matrix is " + std::to_string(e.matrix.rows()) + "x" +
         std::to_string(e.matrix.cols()) + ", expected " + std::to_string(e.target.rank()) + "x" +
         std::to_string(e.source.rank()));
}

inline bool preserves_gram(const EmbeddingMap& e) {
  check_embedding_shape(e);
  return e.matrix.transpose() * e.target.gram() * e.matrix == e.source.gram();
}

inline bool verify_primitive_embedding(const EmbeddingMap& e) {
  return preserves_gram(e) && is_primitive_matrix(e.matrix);
}

struct Complement {
  std::optional<Lattice> lattice;  // empty when the complement has rank 0
  IntMatrix basis;                 // columns in target coordinates
};

inline Complement orthogonal_complement(const EmbeddingMap& e) {
  if (!verify_primitive_embedding(e)) fail("orthogonal complement needs a primitive embedding");
  IntMatrix k = integer_kernel(e.matrix.transpose() * e.target.gram());
  Complement out;
  out.basis = k;
  if (k.cols() > 0) {
    std::string label = e.source.label().empty() ? "" : e.source.label() + "^perp";
    out.lattice = Lattice(k.transpose() * e.target.gram() * k, label);
  }
  return out;
}

// Embedding of a complement back into the ambient lattice.
inline EmbeddingMap complement_embedding(const EmbeddingMap& e, const Complement& c) {
  if (!c.lattice) fail("complement has rank zero");
  return {*c.lattice, e.target, c.basis};
}

// ---------------------------------------------------------------------------

struct EmbeddingSearchLimits {
  long node_limit = 50'000'000;  // candidate vectors examined before giving up
};

namespace detail {

// Candidate image vectors for one source basis vector.
class CandidateStream {
 public:
  // Definite targets: every vector of the requested norm (both signs),
  // from the complete short-vector list.
  CandidateStream(const std::vector<IntVector>* pool) : pool_(pool) {}
  // Indefinite targets: boxed sparse-first enumeration, both signs.
  CandidateStream(std::size_t n, long bound) : box_(BoxEnumerator(n, bound, false)) {}

  bool next(IntVector& out) {
    if (pool_) {
      if (pos_ >= pool_->size()) return false;
      out = (*pool_)[pos_++];
      return true;
    }
    if (!box_->next(raw_)) return false;
    out = to_int_vector(raw_);
    return true;
  }

 private:
  const std::vector<IntVector>* pool_ = nullptr;
  std::size_t pos_ = 0;
  std::optional<BoxEnumerator> box_;
  std::vector<long> raw_;
};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Lattice& source, const Lattice& target, const SearchBox& box,
                  const EmbeddingSearchLimits& limits)
      : src_(source), dst_(target), box_(box), limits_(limits) {
    auto sig = signature(target);
    if (sig.neg == 0 || sig.pos == 0) {
      sign_ = sig.neg == 0 ? 1 : -1;
      Integer top = 0;
      for (std::size_t i = 0; i < source.rank(); ++i)
        top = std::max(top, Integer(abs_value(source.gram()(i, i))));
      Lattice pos = sign_ > 0 ? target : twist(target, -1);
      pool_ = with_negatives(short_vectors(pos, top));
      definite_ = true;
    }
  }

  std::optional<IntMatrix> run() {
    images_.clear();
    if (src_.rank() > dst_.rank()) return std::nullopt;
    if (descend(0)) return IntMatrix::from_columns(dst_.rank(), images_);
    return std::nullopt;
  }

  bool exhausted_budget() const { return nodes_ >= limits_.node_limit; }

 private:
  bool descend(std::size_t k) {
    if (k == src_.rank()) return true;
    auto stream = definite_ ? CandidateStream(&pool_) : CandidateStream(dst_.rank(), box_.bound);
    const Integer& want = src_.gram()(k, k);
    IntVector v;
    while (stream.next(v)) {
      if (++nodes_ >= limits_.node_limit) return false;
      if (dst_.norm(v) != want) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = dst_.pair(images_[i], v) == src_.gram()(i, k);
      if (!ok) continue;
      images_.push_back(v);
      if (is_primitive_matrix(IntMatrix::from_columns(dst_.rank(), images_)) && descend(k + 1))
        return true;
      images_.pop_back();
      if (exhausted_budget()) return false;
    }
    return false;
  }

  const Lattice& src_;
  const Lattice& dst_;
  SearchBox box_;
  EmbeddingSearchLimits limits_;
  bool definite_ = false;
  int sign_ = 1;
  std::vector<IntVector> pool_;
  std::vector<IntVector> images_;
  long nodes_ = 0;
};

}  // namespace detail

// Backtracking search for a primitive embedding M -> L. Columns are matched
// in order: norm first, then pairings with earlier images; every partial
// image is kept primitive. Not finding one means "not within the box".
inline std::optional<EmbeddingMap> find_primitive_embedding(const Lattice& M, const Lattice& L,
                                                            const SearchBox& box,
                                                            const EmbeddingSearchLimits& limits = {}) {
  detail::EmbeddingSearch search(M, L, box, limits);
  auto m = search.run();
  if (!m) return std::nullopt;
  EmbeddingMap e{M, L, *m};
  if (!verify_primitive_embedding(e)) fail("internal error: search produced an invalid embedding");
  return e;
}

// ---------------------------------------------------------------------------

// Rank, signature, parity and discriminant form. For even indefinite
// lattices this decides isometry whenever Nikulin's uniqueness criterion
// applies; for definite lattices it is only a necessary condition.
inline bool invariants_match(const Lattice& a, const Lattice& b, long bound = kDefaultDiscFormBound) {
  if (a.rank() != b.rank()) return false;
  if (!(signature(a) == signature(b))) return false;
  if (is_even(a) != is_even(b)) return false;
  if (delta(a) != delta(b)) return false;
  return disc_forms_equivalent(discriminant_form_unchecked(a), discriminant_form_unchecked(b), bound);
}

struct DefiniteIsometryLimits {
  std::size_t rank_cap = 8;
};

namespace detail {

// Permute a reduced basis so that norms increase.
inline LLLResult sorted_reduction(const Lattice& L) {
  auto red = lll_reduce(L);
  const std::size_t n = L.rank();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return red.reduced.gram()(a, a) < red.reduced.gram()(b, b);
  });
  IntMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(order[j], j) = 1;
  IntMatrix t = red.transform * p;
  return {Lattice(p.transpose() * red.reduced.gram() * p, L.label()), t};
}

// Basis images for an isometry source -> target of positive definite
// lattices, by backtracking over equal-norm vectors of the target.
class DefiniteMatcher {
 public:
  DefiniteMatcher(const Lattice& source, const Lattice& target) : src_(source), dst_(target) {
    Integer top = 0;
    for (std::size_t i = 0; i < source.rank(); ++i) top = std::max(top, Integer(source.gram()(i, i)));
    pool_ = with_negatives(short_vectors(target, top));
    for (std::size_t i = 0; i < pool_.size(); ++i) norms_.push_back(dst_.norm(pool_[i]));
  }

  template <class Accept>
  std::optional<IntMatrix> run(Accept&& accept) {
    images_.clear();
    if (descend(0, accept)) return IntMatrix::from_columns(dst_.rank(), images_);
    return std::nullopt;
  }

  // Extra pairwise constraint checked when a new image is placed; receives
  // the index being placed and the images so far (including the new one).
  std::function<bool(std::size_t, const std::vector<IntVector>&)> pairwise;

 private:
  template <class Accept>
  bool descend(std::size_t k, Accept& accept) {
    if (k == src_.rank()) return accept(IntMatrix::from_columns(dst_.rank(), images_));
    const Integer& want = src_.gram()(k, k);
    for (std::size_t c = 0; c < pool_.size(); ++c) {
      if (norms_[c] != want) continue;
      const IntVector& v = pool_[c];
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = dst_.pair(images_[i], v) == src_.gram()(i, k);
      if (!ok) continue;
      images_.push_back(v);
      if ((!pairwise || pairwise(k, images_)) && descend(k + 1, accept)) return true;
      images_.pop_back();
    }
    return false;
  }

  const Lattice& src_;
  const Lattice& dst_;
  std::vector<IntVector> pool_;
  std::vector<Integer> norms_;
  std::vector<IntVector> images_;
};

}  // namespace detail

// Explicit T with T^T gram(b) T = gram(a), or nothing if a and b are not
// isometric. Both lattices must be definite of the same sign.
inline std::optional<IntMatrix> isometric_definite(const Lattice& a, const Lattice& b,
                                                   const DefiniteIsometryLimits& limits = {}) {
  auto sa = signature(a), sb = signature(b);
  if (!sa.definite() || !sb.definite()) fail("isometric_definite needs definite lattices");
  if (a.rank() > limits.rank_cap || b.rank() > limits.rank_cap)
    fail("isometric_definite: rank exceeds the configured cap " + std::to_string(limits.rank_cap));
  if (!(sa == sb) || determinant(a) != determinant(b)) return std::nullopt;
  if (a.rank() == 0) return IntMatrix(0, 0);
  const bool negative = sa.pos == 0;
  Lattice pa = negative ? twist(a, -1) : a;
  Lattice pb = negative ? twist(b, -1) : b;
  auto ra = detail::sorted_reduction(pa);
  auto rb = detail::sorted_reduction(pb);
  detail::DefiniteMatcher matcher(ra.reduced, rb.reduced);
  auto t = matcher.run([](const IntMatrix&) { return true; });
  if (!t) return std::nullopt;
  IntMatrix out = rb.transform * *t * unimodular_inverse(ra.transform);
  if (out.transpose() * b.gram() * out != a.gram()) fail("internal error: isometry check failed");
  return out;
}

}  // namespace occult

#endif  // OCCULT_EMBEDDING_HPP_
