// Lattices attached to the moduli problems (genus 4, 3 and 6 curves, five
// and six points on P^1, cubic surfaces), with their claimed invariants and
// explicit primitive embeddings into the K3 lattice.
//
// K3 lattice coordinates: U blocks at 0-1, 2-3, 4-5 (e_i, f_i), then two
// E8(-1) blocks at 6-13 and 14-21 in Bourbaki order.

#ifndef OCCULT_CATALOG_HPP_
#define OCCULT_CATALOG_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "expression.hpp"

namespace occult {

struct CatalogEntry {
  std::string id;
  std::string expression;
  std::optional<std::string> claimed_complement;
  std::optional<long> claimed_d;
  std::optional<long> claimed_ball_dim;
  std::string citation;
  Lattice lattice;
  std::optional<EmbeddingMap> embedding_witness;
};

namespace detail {

inline constexpr std::size_t kK3Rank = 22;

// Sparse column in K3 coordinates: (index, coefficient) pairs.
inline IntVector k3_vector(std::initializer_list<std::pair<int, long>> terms) {
  IntVector v(kK3Rank, Integer(0));
  for (auto [i, c] : terms) v[std::size_t(i)] += c;
  return v;
}

inline IntVector k3_unit(int i) { return k3_vector({{i, 1}}); }

inline std::vector<IntVector> witness_columns(const std::string& id) {
  using P = std::pair<int, long>;
  if (id == "L4")
    return {k3_vector({P{0, 1}, P{2, 1}}), k3_vector({P{1, 1}, P{3, 2}})};
  if (id == "L3")
    return {k3_vector({P{0, 1}, P{1, 1}}), k3_vector({P{2, 1}, P{3, -1}}), k3_vector({P{4, 1}, P{5, -1}}),
            k3_unit(6), k3_unit(7), k3_unit(10), k3_unit(12), k3_unit(14)};
  if (id == "L6")
    return {k3_vector({P{0, 1}, P{1, 1}}), k3_vector({P{2, 1}, P{3, -1}}), k3_vector({P{4, 1}, P{5, -1}}),
            k3_unit(6), k3_unit(7)};
  if (id == "L5")
    return {k3_vector({P{0, 1}, P{1, 1}}), k3_vector({P{0, 1}, P{2, 1}, P{3, -1}}),
            k3_unit(8), k3_unit(9), k3_unit(10), k3_unit(11),
            k3_unit(16), k3_unit(17), k3_unit(18), k3_unit(19)};
  if (id == "L6prime") {
    std::vector<IntVector> cols{k3_unit(0), k3_unit(1)};
    for (int i = 6; i < 12; ++i) cols.push_back(k3_unit(i));
    cols.push_back(k3_vector({P{2, 1}, P{3, -1}}));
    cols.push_back(k3_vector({P{3, 1}, P{4, 1}, P{5, -1}}));
    cols.push_back(k3_unit(14));
    cols.push_back(k3_unit(16));
    cols.push_back(k3_unit(18));
    cols.push_back(k3_unit(19));
    return cols;
  }
  return {};
}

struct EntrySpec {
  const char* id;
  const char* expression;
  const char* complement;
  long d;
  long ball_dim;
  const char* citation;
};

// 0 marks an absent claim.
inline const std::vector<EntrySpec>& entry_specs() {
  static const std::vector<EntrySpec> specs{
      {"LK3", "LK3", nullptr, 0, 0, "k3-lattice"},
      {"L4", "U(3)", "U(3)+U+E8(-1)^2", 3, 9, "genus-four"},
      {"L3", "A1+A1(-1)^7", "U(2)^2+D8(-1)+A1(-1)^2", 2, 6, "genus-three"},
      {"L6", "A1+A1(-1)^4", nullptr, 2, 15, "genus-six"},
      {"L5", "V+A4(-1)^2", nullptr, 2, 2, "five-points"},
      {"L6prime", "U+E6(-1)+A2(-1)^3", "A2+A2(-1)^3", 2, 4, "six-points"},
  };
  return specs;
}

}  // namespace detail

class Catalog {
 public:
  // Builds every entry and checks it: witnesses must be primitive
  // embeddings and claimed complements must have rank 22 - rank.
  Catalog() {
    const Lattice k3 = k3_lattice();
    for (const auto& s : detail::entry_specs()) {
      CatalogEntry e{s.id, s.expression, std::nullopt, std::nullopt, std::nullopt, s.citation,
                     parse_lattice_expression(s.expression).relabeled(s.id), std::nullopt};
      if (s.complement) e.claimed_complement = s.complement;
      if (s.d) e.claimed_d = s.d;
      if (s.ball_dim) e.claimed_ball_dim = s.ball_dim;
      auto cols = detail::witness_columns(s.id);
      if (!cols.empty()) {
        EmbeddingMap w{e.lattice, k3, IntMatrix::from_columns(k3.rank(), cols)};
        if (!verify_primitive_embedding(w)) fail("catalog: embedding witness for " + e.id + " is not a primitive embedding");
        e.embedding_witness = w;
      }
      if (e.claimed_complement) {
        Lattice c = parse_lattice_expression(*e.claimed_complement);
        if (c.rank() + e.lattice.rank() != k3.rank())
          fail("catalog: claimed complement of " + e.id + " has rank " + std::to_string(c.rank()));
      }
      entries_.push_back(std::move(e));
    }
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  const CatalogEntry* find(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return &e;
    return nullptr;
  }

  const CatalogEntry& at(const std::string& id) const {
    if (const CatalogEntry* e = find(id)) return *e;
    fail("catalog: no entry '" + id + "'");
  }

  NameResolver resolver() const {
    return [this](const std::string& name) -> std::optional<Lattice> {
      if (const CatalogEntry* e = find(name)) return e->lattice;
      return std::nullopt;
    };
  }

  // Expression over catalog names and building blocks.
  Lattice evaluate(const std::string& expression) const { return parse_lattice_expression(expression, resolver()); }

 private:
  std::vector<CatalogEntry> entries_;
};

inline const Catalog& default_catalog() {
  static const Catalog catalog;
  return catalog;
}

}  // namespace occult

#endif  // OCCULT_CATALOG_HPP_
