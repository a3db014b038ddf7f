// The full verification suite over the catalog: d-values of the basic
// lemma, K3 lattice invariants, complements and their discriminant forms,
// finite orthogonal groups, period-domain dimensions and d-claims.

#ifndef OCCULT_SUITE_HPP_
#define OCCULT_SUITE_HPP_

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "config.hpp"
#include "isometry.hpp"
#include "report.hpp"

namespace occult {

inline std::string vector_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

inline std::string invariants_str(const Lattice& L) {
  return "rank " + std::to_string(L.rank()) + ", signature " + signature(L).str() + ", " +
         (is_even(L) ? "even" : "odd") + ", disc " + discriminant_group(L).str();
}

inline Lattice complement_of(const CatalogEntry& e) {
  if (!e.embedding_witness) fail("catalog entry " + e.id + " has no embedding witness");
  auto c = orthogonal_complement(*e.embedding_witness);
  if (!c.lattice) fail("complement of " + e.id + " has rank zero");
  return c.lattice->relabeled(e.id + "perp");
}

// ---------------------------------------------------------------------------
// Period-domain models: a lattice isometric to the relevant complement (or
// the catalog lattice for cubic surfaces) with an explicit isometry whose
// cyclotomic profile is then computed.

struct BallCase {
  std::string id;
  std::string citation;
  Lattice model;
  Isometry action;
  std::optional<Lattice> reference;  // lattice the model must match
  std::size_t invariant_rank = 0;
  long claimed = 0;
  bool tension = false;  // claim known to disagree with the computation
};

namespace detail {

inline Isometry coxeter_power(const Lattice& L, unsigned k) { return power(coxeter_element(L), k); }

// e1 -> e2 -> -e1, f1 -> f2 -> -f1 on U(m) + U(m) in the basis (e1,f1,e2,f2).
inline Isometry u_pair_rotation(const Lattice& uu) {
  IntMatrix j(4, 4);
  j(2, 0) = 1;
  j(3, 1) = 1;
  j(0, 2) = -1;
  j(1, 3) = -1;
  return verify_isometry(uu, j);
}

// A4 with the form (x, (1 + c + c^{-1}) y), c the Coxeter element: signature
// (2,2), determinant 5, still preserved by c.
inline Isometry a4_golden_twist() {
  Lattice a4 = make_catalog(CatalogName::A, 4);
  Isometry c = coxeter_element(a4);
  IntMatrix m = IntMatrix::identity(4) + c.matrix + inverse(c).matrix;
  Lattice w(a4.gram() * m, "W");
  return verify_isometry(w, c.matrix);
}

inline Isometry found_or_fail(const std::optional<Isometry>& g, const std::string& what) {
  if (!g) fail("no isometry with the required profile on " + what);
  return *g;
}

}  // namespace detail

inline std::vector<BallCase> ball_cases(const Catalog& cat, const Settings& s = {}) {
  std::vector<BallCase> out;
  const Lattice e8m = twist(make_catalog(CatalogName::E8), -1);
  const Lattice a2 = make_catalog(CatalogName::A, 2);
  const Lattice a2m = twist(a2, -1);
  const Lattice a4m = twist(make_catalog(CatalogName::A, 4), -1);

  {
    const auto& e = cat.at("L4");
    Isometry g = direct_sum({coxeter_element(a2), coxeter_element(a2m), detail::coxeter_power(e8m, 10),
                             detail::coxeter_power(e8m, 10)});
    out.push_back({"balldim.genus-four", e.citation, g.lattice, g, complement_of(e), e.lattice.rank(),
                   *e.claimed_ball_dim, false});
  }
  {
    const auto& e = cat.at("L3");
    Lattice u2 = twist(make_catalog(CatalogName::U), 2);
    Lattice d8m = twist(make_catalog(CatalogName::D, 8), -1);
    Lattice a1m = twist(make_catalog(CatalogName::A, 1), -1);
    auto lim = s.profile_limits();
    Isometry g = direct_sum(
        {detail::u_pair_rotation(direct_sum({u2, u2})),
         detail::found_or_fail(find_isometry_with_profile(d8m, CyclotomicProfile::of({{4, 4}}), lim), "D8(-1)"),
         detail::found_or_fail(find_isometry_with_profile(direct_sum({a1m, a1m}), CyclotomicProfile::of({{4, 1}}), lim),
                               "A1(-1)^2")});
    out.push_back({"balldim.genus-three", e.citation, g.lattice, g, complement_of(e), e.lattice.rank(),
                   *e.claimed_ball_dim, false});
  }
  {
    const auto& e = cat.at("L6");
    Lattice perp = complement_of(e);
    Isometry g = verify_isometry(perp, -IntMatrix::identity(perp.rank()));
    out.push_back({"balldim.genus-six", e.citation, perp, g, perp, e.lattice.rank(), *e.claimed_ball_dim, false});
  }
  {
    const auto& e = cat.at("L5");
    Isometry g = direct_sum({detail::a4_golden_twist(), coxeter_element(a4m), coxeter_element(a4m)});
    out.push_back({"balldim.five-points", e.citation, g.lattice, g, complement_of(e), e.lattice.rank(),
                   *e.claimed_ball_dim, false});
  }
  {
    const auto& e = cat.at("L6prime");
    Isometry g = direct_sum({coxeter_element(a2), coxeter_element(a2m), coxeter_element(a2m), coxeter_element(a2m)});
    out.push_back({"balldim.six-points", e.citation, g.lattice, g, complement_of(e), e.lattice.rank(),
                   *e.claimed_ball_dim, true});
  }
  {
    std::vector<Isometry> parts{coxeter_element(a2)};
    for (int i = 0; i < 4; ++i) parts.push_back(coxeter_element(a2m));
    Isometry g = direct_sum(parts);
    out.push_back({"balldim.cubic-surfaces", "cubic-surfaces", g.lattice, g, std::nullopt, 0, 4, false});
  }
  return out;
}

// Datum of the mu_n action: the model's profile with the invariant lattice
// added to m_1.
inline MuActionDatum ball_datum(const BallCase& c, unsigned cutoff = kDefaultOrderCutoff) {
  MuActionDatum d;
  auto ord = order_of(c.action, cutoff);
  if (!ord) fail(c.id + ": model action has no finite order");
  d.n = *ord;
  d.profile = cyclotomic_profile(c.action, cutoff);
  if (c.invariant_rank) d.profile.multiplicities[1] += unsigned(c.invariant_rank);
  d.invariant_rank = c.invariant_rank;
  return d;
}

// ---------------------------------------------------------------------------

namespace detail {

struct PendingCheck {
  std::string id;
  std::string citation;
  std::function<CheckRow()> run;
};

inline CheckRow make_row(std::string computed, std::string claimed, CheckStatus status) {
  CheckRow r;
  r.computed = std::move(computed);
  r.claimed = std::move(claimed);
  r.status = status;
  return r;
}

inline CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

inline std::string d_str(const DValue& d) {
  return d.gcd.get_str() + (d.exact() ? " (exact)" : " (upper bound, content " + d.certified_lower_bound.get_str() + ")");
}

inline std::vector<PendingCheck> suite_checks(const Catalog& cat, const Settings& s) {
  std::vector<PendingCheck> checks;
  const SearchBox box = s.box();
  const long window = s.stabilization_window;
  const long bound = s.disc_form_bound;

  checks.push_back({"lemma.d.U(n)", "lattice-lemma-d", [=] {
                      std::string got;
                      bool ok = true;
                      for (long n = 1; n <= 5; ++n) {
                        DValue d = d_value(twist(make_catalog(CatalogName::U), n), box, window);
                        ok = ok && d.exact() && d.gcd == n;
                        got += (n > 1 ? "," : "") + d.gcd.get_str() + (d.exact() ? "" : "?");
                      }
                      return make_row("d(U(1..5)) = " + got + " (certified)", "d(U(n)) = n", pass_if(ok));
                    }});
  for (const char* expr : {"A1+A1(-1)^2", "V+A4(-1)"}) {
    checks.push_back({std::string("lemma.d.") + expr, "lattice-lemma-d", [=] {
                        DValue d = d_value(parse_lattice_expression(expr), box, window);
                        std::string got = d_str(d);
                        if (!d.witnesses.empty()) got += ", witness " + vector_str(d.witnesses.back().vector);
                        return make_row(got, "1", pass_if(d.gcd == 1 && d.exact()));
                      }});
  }
  checks.push_back({"lk3.invariants", "k3-lattice", [&cat] {
                      const Lattice& k3 = cat.at("LK3").lattice;
                      std::string got = "rank " + std::to_string(k3.rank()) + ", det " + determinant(k3).get_str() +
                                        ", signature " + signature(k3).str() + ", " + (is_even(k3) ? "even" : "odd") +
                                        ", disc " + discriminant_group(k3).str();
                      std::string want = "rank 22, det -1, signature (3,19), even, disc 0";
                      return make_row(got, want, pass_if(got == want));
                    }});

  // Complement identifications.
  for (const auto& e : cat.entries()) {
    if (!e.embedding_witness) continue;
    if (e.claimed_complement) {
      checks.push_back({"complement." + e.id, e.citation, [&cat, &e, bound] {
                          Lattice perp = complement_of(e);
                          Lattice want = cat.evaluate(*e.claimed_complement);
                          bool ok = invariants_match(perp, want, bound);
                          return make_row((ok ? "matches: " : "differs: ") + invariants_str(perp), *e.claimed_complement,
                                          pass_if(ok));
                        }});
    } else {
      checks.push_back({"complement." + e.id, e.citation, [&e] {
                          Lattice perp = complement_of(e);
                          std::size_t r = e.lattice.rank();
                          std::string got = "rank " + std::to_string(perp.rank()) + ", signature " + signature(perp).str();
                          std::string want =
                              "rank " + std::to_string(22 - r) + ", signature " + Signature{2, 20 - r}.str();
                          return make_row(got, want, pass_if(got == want));
                        }});
    }
  }
  for (const auto& e : cat.entries()) {
    if (!e.embedding_witness) continue;
    checks.push_back({"duality." + e.id, e.citation, [&e, bound] {
                        Lattice perp = complement_of(e);
                        Integer dp = delta(perp), dl = delta(e.lattice);
                        bool q = disc_forms_equivalent(discriminant_form(perp), discriminant_form(e.lattice).negated(), bound);
                        std::string got = "Delta " + dp.get_str() + " vs " + dl.get_str() + ", q(perp) " +
                                          (q ? "~" : "!~") + " -q(" + e.id + ")";
                        return make_row(got, "Delta equal, q(perp) ~ -q(" + e.id + ")", pass_if(dp == dl && q));
                      }});
  }

  // Finite orthogonal groups.
  struct GroupClaim {
    const char* id;
    long order;
    const char* name;
  };
  for (GroupClaim gc : {GroupClaim{"L5", 240, "|{+-1} x S5| = 240"}, GroupClaim{"L6prime", 1440, "|mu2 x S6| = 1440"}}) {
    const auto& e = cat.at(gc.id);
    checks.push_back({std::string("group.O(q(") + gc.id + "perp))", e.citation, [&e, gc, s] {
                        Lattice perp = complement_of(e);
                        DiscriminantForm q = discriminant_form(perp);
                        std::int64_t n = orthogonal_group_order_mod_p(q, s.group_caps());
                        return make_row(std::to_string(n) + " on " + q.group.str(), gc.name, pass_if(n == gc.order));
                      }});
  }

  // Period-domain dimensions.
  const auto cases = std::make_shared<std::vector<BallCase>>();
  const auto build = [cases, &cat, s] {
    if (cases->empty()) *cases = ball_cases(cat, s);
  };
  const std::vector<std::string> ball_ids{"balldim.genus-four", "balldim.genus-three", "balldim.genus-six",
                                          "balldim.five-points", "balldim.six-points", "balldim.cubic-surfaces"};
  const std::vector<std::string> ball_cites{"genus-four", "genus-three", "genus-six",
                                            "five-points", "six-points", "cubic-surfaces"};
  for (std::size_t i = 0; i < ball_ids.size(); ++i) {
    checks.push_back({ball_ids[i], ball_cites[i], [cases, build, i, bound, s] {
                        build();
                        const BallCase& c = (*cases)[i];
                        if (c.reference && !invariants_match(c.model, *c.reference, bound))
                          return make_row("model lattice does not match the complement", std::to_string(c.claimed),
                                          CheckStatus::Fail);
                        MuActionDatum d = ball_datum(c, s.order_cutoff);
                        std::size_t dim = ball_dimension(d);
                        std::string got = std::to_string(dim) + " (n=" + std::to_string(d.n) + ", " + d.profile.str() + ")";
                        CheckStatus st = dim == std::size_t(c.claimed) ? CheckStatus::Pass
                                         : c.tension                    ? CheckStatus::DiscrepancyFlag
                                                                        : CheckStatus::Fail;
                        return make_row(got, std::to_string(c.claimed), st);
                      }});
  }

  // d-claims, under the gcd reading and the "2d is realized" reading.
  for (const auto& e : cat.entries()) {
    if (!e.claimed_d) continue;
    const long claim = *e.claimed_d;
    checks.push_back({"d." + e.id + ".gcd", e.citation, [&e, claim, box, window] {
                        DValue d = d_value(e.lattice, box, window);
                        CheckStatus st = d.gcd == claim && d.exact() ? CheckStatus::Pass
                                         : d.exact() && d.gcd < claim && claim % d.gcd.get_si() == 0
                                             ? CheckStatus::DiscrepancyFlag
                                             : CheckStatus::Fail;
                        return make_row(d_str(d), std::to_string(claim), st);
                      }});
    checks.push_back({"d." + e.id + ".realized", e.citation, [&e, claim, box] {
                        auto w = degree_witness(e.lattice, claim, box);
                        std::string got = w ? std::to_string(claim) + " realized by " + vector_str(*w)
                                            : "no primitive vector of norm " + std::to_string(2 * claim) + " in box";
                        return make_row(got, std::to_string(claim), pass_if(bool(w)));
                      }});
  }

  checks.push_back({"embed.U(3)->LK3", "genus-four", [&cat, box, s] {
                      const Lattice& k3 = cat.at("LK3").lattice;
                      auto m = find_primitive_embedding(cat.at("L4").lattice, k3, box, s.embedding_limits());
                      if (!m) return make_row("not found within box " + std::to_string(box.bound), "primitive embedding exists",
                                              CheckStatus::Fail);
                      Lattice perp = *orthogonal_complement(*m).lattice;
                      bool ok = invariants_match(perp, cat.evaluate("U(3)+U+E8(-1)^2"), s.disc_form_bound);
                      return make_row(std::string("found; complement ") + (ok ? "matches" : "differs"),
                                      "primitive embedding exists", pass_if(ok));
                    }});
  checks.push_back({"admissible.genus-six", "genus-six", [&cat] {
                      Lattice perp = complement_of(cat.at("L6"));
                      Isometry g = verify_isometry(perp, -IntMatrix::identity(perp.rank()));
                      bool ok = disc_action_trivial(g);
                      return make_row(std::string("-id ") + (ok ? "acts trivially" : "acts nontrivially") + " on " +
                                          discriminant_group(perp).str(),
                                      "-id acts trivially on disc(L6perp)", pass_if(ok));
                    }});
  return checks;
}

inline bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only)
    if (id == o || (id.size() > o.size() && id.compare(0, o.size(), o) == 0 && id[o.size()] == '.')) return true;
  return false;
}

}  // namespace detail

struct SuiteOptions {
  std::vector<std::string> only;  // ids or dotted prefixes; empty = everything
  bool timings = false;
};

inline std::vector<std::string> suite_check_ids(const Catalog& cat = default_catalog(), const Settings& s = {}) {
  std::vector<std::string> ids;
  for (const auto& c : detail::suite_checks(cat, s)) ids.push_back(c.id);
  return ids;
}

// Individual failures (including exceptions) become report rows.
inline VerificationReport run_check_suite(const SuiteOptions& opts = {}, const Settings& s = {},
                                          const Catalog& cat = default_catalog()) {
  VerificationReport report;
  for (auto& check : detail::suite_checks(cat, s)) {
    if (!detail::selected(check.id, opts.only)) continue;
    auto t0 = std::chrono::steady_clock::now();
    CheckRow row;
    try {
      row = check.run();
    } catch (const std::exception& ex) {
      row = detail::make_row(std::string("error: ") + ex.what(), "", CheckStatus::Fail);
    }
    row.id = check.id;
    row.citation = check.citation;
    if (opts.timings)
      row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(row));
  }
  return report;
}

}  // namespace occult

#endif  // OCCULT_SUITE_HPP_
