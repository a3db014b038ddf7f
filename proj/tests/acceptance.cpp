// Acceptance checks AC1-AC11. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Expected values come from the oracles below,
// not from the library routines under test.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"

using namespace occult;

namespace {

// ---- oracles ---------------------------------------------------------------

using RatPoly = std::vector<Rational>;  // low degree first

Rational rat_det(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// det(tI - A) by evaluating at t = 0..n and interpolating.
RatPoly charpoly_by_interpolation(const IntMatrix& a) {
  const std::size_t n = a.rows();
  RatPoly result(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    RatMatrix m = to_rational(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(long(k)) : Rational(0)) - m(i, j);
    Rational yk = rat_det(m);
    RatPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis = poly_mul(basis, RatPoly{Rational(-long(j)), Rational(1)});
      denom *= Rational(long(k) - long(j));
    }
    for (std::size_t i = 0; i <= n; ++i) result[i] += yk * basis[i] / denom;
  }
  trim(result);
  return result;
}

// Long division; returns the quotient when the remainder vanishes.
std::optional<RatPoly> divide(RatPoly num, const RatPoly& den) {
  if (num.size() < den.size()) return std::nullopt;
  RatPoly q(num.size() - den.size() + 1, Rational(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  for (const auto& c : num)
    if (c != 0) return std::nullopt;
  return q;
}

// Phi_k from x^k - 1 = prod_{d | k} Phi_d.
RatPoly cyclotomic(unsigned k) {
  RatPoly p(k + 1, Rational(0));
  p[0] = -1;
  p[k] = 1;
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) p = *divide(p, cyclotomic(d));
  return p;
}

// Multiplicities of cyclotomic factors of the characteristic polynomial.
std::map<unsigned, unsigned> cyclotomic_exponents(const IntMatrix& a, unsigned max_k = 60) {
  RatPoly p = charpoly_by_interpolation(a);
  std::map<unsigned, unsigned> out;
  for (unsigned k = 1; k <= max_k && p.size() > 1; ++k) {
    RatPoly phi = cyclotomic(k);
    while (auto q = divide(p, phi)) {
      p = *q;
      ++out[k];
    }
  }
  if (p.size() > 1) out[0] = unsigned(p.size() - 1);  // non-cyclotomic remainder
  return out;
}

std::optional<unsigned> naive_order(const IntMatrix& g, unsigned cutoff = 1000) {
  IntMatrix id = IntMatrix::identity(g.rows()), p = g;
  for (unsigned k = 1; k <= cutoff; ++k) {
    if (p == id) return k;
    p = p * g;
  }
  return std::nullopt;
}

// Reflection in a root alpha of norm +-2, written out directly.
IntMatrix naive_reflection(const IntMatrix& gram, std::size_t i) {
  const std::size_t n = gram.rows();
  IntMatrix s = IntMatrix::identity(n);
  Integer a = gram(i, i);
  for (std::size_t j = 0; j < n; ++j) {
    Integer c = 2 * gram(i, j) / a;
    s(i, j) -= c;
  }
  return s;
}

IntMatrix naive_coxeter(const IntMatrix& gram) {
  IntMatrix c = IntMatrix::identity(gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) c = c * naive_reflection(gram, i);
  return c;
}

bool preserves(const IntMatrix& gram, const IntMatrix& g) { return g.transpose() * gram * g == gram; }

// Histogram of q(x) = x^T G^{-1} x mod 2 over G^{-1}Z^n / Z^n, enumerated
// through coset representatives of Z^n / G Z^n.
std::map<Rational, long> q_histogram(const Lattice& L, bool negate = false) {
  const std::size_t n = L.rank();
  auto s = smith_normal_form(L.gram());
  RatMatrix ginv = inverse(L.gram());
  RatMatrix uinv = inverse(s.left);
  std::vector<long> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s.diag[i].get_si();
  std::map<Rational, long> hist;
  std::vector<long> x(n, 0);
  for (;;) {
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i] += uinv(i, j) * Rational(x[j]);
    Rational q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * ginv(i, j) * v[j];
    if (negate) q = -q;
    ++hist[mod_rational(q, 2)];
    std::size_t i = 0;
    while (i < n && x[i] + 1 >= d[i]) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return hist;
}

Signature oracle_signature(const Lattice& L, std::mt19937& rng) {
  for (int t = 0; t < 200; ++t) {
    auto s = oracle::leading_minor_signature(oracle::scramble(L, oracle::random_unimodular(L.rank(), rng, 60)).gram());
    if (s) return *s;
  }
  fail("oracle signature: no scramble with nonzero leading minors");
}

bool oracle_even(const Lattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i)
    if (L.gram()(i, i) % 2 != 0) return false;
  return true;
}

// gcd of (v,v)/2 over primitive v in the box |x_i| <= r with (v,v) > 0.
Integer naive_d(const Lattice& L, long r) {
  const std::size_t n = L.rank();
  std::vector<long> x(n, -r);
  Integer g = 0;
  for (;;) {
    long c = 0;
    for (long xi : x) c = std::gcd(c, std::abs(xi));
    if (c == 1) {
      IntVector v(x.begin(), x.end());
      Integer nrm = L.norm(v);
      if (nrm > 0) g = gcd_of(g, Integer(nrm / 2));
    }
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  return g;
}

// Lower bound: d(L) is a multiple of gcd(G_ii / 2, G_ij).
Integer naive_content(const Lattice& L) {
  Integer g = 0;
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = i; j < L.rank(); ++j) g = gcd_of(g, i == j ? Integer(L.gram()(i, i) / 2) : L.gram()(i, j));
  return g;
}

// ---- harness ---------------------------------------------------------------

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::printf("%-5s %-4s %s%s%s\n", id, o.ok ? "PASS" : "FAIL", title, o.ok ? "" : " :: ", o.detail.c_str());
  if (!o.ok) ++failures;
}

Lattice expr(const std::string& e) { return default_catalog().evaluate(e); }

}  // namespace

int main() {
  const Catalog& cat = default_catalog();
  std::mt19937 rng(20261016);

  criterion("AC1", "d-values of the lemma lattices", [&](Outcome& o) {
    for (long n = 1; n <= 5; ++n) {
      Lattice L = twist(make_catalog(CatalogName::U), n);
      Integer want = naive_d(L, 3);
      o.require(want == naive_content(L) && want == n, "oracle d(U(" + std::to_string(n) + "))");
      DValue d = d_value(L, SearchBox(6));
      o.require(d.exact() && d.gcd == want, "d(U(" + std::to_string(n) + "))");
    }
    for (const char* e : {"A1+A1(-1)^2", "V+A4(-1)"}) {
      Lattice L = expr(e);
      Integer want = naive_d(L, 2);
      o.require(want == 1 && naive_content(L) == 1, std::string("oracle d(") + e + ")");
      DValue d = d_value(L, SearchBox(6));
      o.require(d.exact() && d.gcd == want, std::string("d(") + e + ")");
    }
  });

  criterion("AC2", "K3 lattice invariants", [&](Outcome& o) {
    const Lattice& k3 = cat.at("LK3").lattice;
    o.require(k3.rank() == 22, "rank");
    o.require(rat_det(to_rational(k3.gram())) == -1 && determinant(k3) == -1, "det");
    Signature s = oracle_signature(k3, rng);
    o.require(s == Signature{3, 19} && signature(k3) == s, "signature");
    o.require(oracle_even(k3) && is_even(k3), "parity");
    o.require(discriminant_group(k3).trivial(), "discriminant group");
  });

  auto identify = [&](Outcome& o, const std::string& id) {
    const CatalogEntry& e = cat.at(id);
    Lattice perp = complement_of(e);
    Lattice want = cat.evaluate(*e.claimed_complement);
    const IntMatrix& m = e.embedding_witness->matrix;
    IntMatrix basis = orthogonal_complement(*e.embedding_witness).basis;
    o.require(m.transpose() * k3_lattice().gram() * basis == IntMatrix(m.cols(), basis.cols()),
              id + ": complement not orthogonal");
    o.require(rat_det(to_rational(perp.gram())) == rat_det(to_rational(want.gram())), id + ": det");
    o.require(oracle_signature(perp, rng) == oracle_signature(want, rng), id + ": signature");
    o.require(oracle_even(perp) == oracle_even(want), id + ": parity");
    o.require(q_histogram(perp) == q_histogram(want), id + ": q-value histogram");
    o.require(invariants_match(perp, want), id + ": invariants_match");
  };

  criterion("AC3", "complement identifications", [&](Outcome& o) {
    for (const char* id : {"L4", "L3", "L6prime"}) identify(o, id);
  });

  criterion("AC4", "discriminant duality of complements", [&](Outcome& o) {
    int n = 0;
    for (const auto& e : cat.entries()) {
      if (!e.embedding_witness) continue;
      ++n;
      Lattice perp = complement_of(e);
      o.require(delta(perp) == delta(e.lattice), e.id + ": Delta");
      o.require(q_histogram(perp) == q_histogram(e.lattice, true), e.id + ": q histogram vs -q");
      o.require(disc_forms_equivalent(discriminant_form(perp), discriminant_form(e.lattice).negated()), e.id + ": forms");
    }
    o.require(n == 5, "expected five embeddings");
  });

  criterion("AC5", "finite orthogonal groups 240 and 1440", [&](Outcome& o) {
    for (auto [id, want] : {std::pair<const char*, long>{"L5", 240}, {"L6prime", 1440}}) {
      DiscriminantForm q = discriminant_form(complement_of(cat.at(id)));
      std::int64_t brute = oracle::brute_force_orthogonal_order(q);
      o.require(brute == want, std::string(id) + ": brute force " + std::to_string(brute));
      o.require(orthogonal_group_order_mod_p(q) == brute, std::string(id) + ": library");
    }
  });

  criterion("AC6", "period-domain dimensions", [&](Outcome& o) {
    const std::map<std::string, long> expect{{"balldim.genus-four", 9}, {"balldim.genus-three", 6},
                                             {"balldim.genus-six", 15}, {"balldim.five-points", 2},
                                             {"balldim.six-points", 3}, {"balldim.cubic-surfaces", 4}};
    for (const auto& c : ball_cases(cat)) {
      o.require(preserves(c.model.gram(), c.action.matrix), c.id + ": not an isometry");
      if (c.reference) {
        o.require(q_histogram(c.model) == q_histogram(*c.reference), c.id + ": model form");
        o.require(oracle_signature(c.model, rng) == oracle_signature(*c.reference, rng), c.id + ": model signature");
      }
      auto n = naive_order(c.action.matrix);
      auto ex = cyclotomic_exponents(c.action.matrix);
      ex[1] += unsigned(c.invariant_rank);
      long dim = -1;
      if (n && *n >= 3) dim = long(ex[*n]) - 1;
      if (n && *n == 2) dim = long(c.model.rank()) - 2;
      o.require(dim == expect.at(c.id), c.id + ": oracle dimension " + std::to_string(dim));
      MuActionDatum d = ball_datum(c);
      o.require(long(ball_dimension(d)) == dim, c.id + ": library dimension");
      o.require((dim == c.claimed) != c.tension, c.id + ": claim agreement");
    }
  });

  criterion("AC7", "Coxeter element orders", [&](Outcome& o) {
    const std::vector<std::tuple<CatalogName, long, unsigned>> table{
        {CatalogName::A, 1, 2}, {CatalogName::A, 2, 3},  {CatalogName::A, 3, 4},  {CatalogName::A, 4, 5},
        {CatalogName::D, 4, 6}, {CatalogName::D, 8, 14}, {CatalogName::E6, 0, 12}, {CatalogName::E8, 0, 30}};
    for (auto [name, param, h] : table) {
      Lattice L = param ? make_catalog(name, param) : make_catalog(name);
      for (long t : {1L, -1L}) {
        Lattice Lt = twist(L, t);
        IntMatrix c = naive_coxeter(Lt.gram());
        o.require(preserves(Lt.gram(), c), Lt.label() + ": naive Coxeter not an isometry");
        o.require(naive_order(c) == h, Lt.label() + ": oracle order");
        o.require(order_of(coxeter_element(Lt)) == h, Lt.label() + ": library order");
      }
    }
    Lattice e8 = make_catalog(CatalogName::E8);
    IntMatrix c10 = power(coxeter_element(e8), 10).matrix;
    auto ex = cyclotomic_exponents(c10);
    o.require(ex == std::map<unsigned, unsigned>{{3, 4}}, "E8 cox^10 oracle profile");
    o.require(cyclotomic_profile(power(coxeter_element(e8), 10)) == CyclotomicProfile::of({{3, 4}}), "E8 cox^10 profile");
  });

  criterion("AC8", "definite isometry testing", [&](Outcome& o) {
    std::vector<Lattice> blocks;
    for (long n = 1; n <= 8; ++n) blocks.push_back(make_catalog(CatalogName::A, n));
    for (long n = 4; n <= 8; ++n) blocks.push_back(make_catalog(CatalogName::D, n));
    blocks.push_back(make_catalog(CatalogName::E6));
    blocks.push_back(make_catalog(CatalogName::E8));
    blocks.push_back(expr("A2(-1)^3"));
    blocks.push_back(expr("A4(-1)^2"));
    for (const auto& L : blocks) {
      for (int t = 0; t < 20; ++t) {
        Lattice s = oracle::scramble(L, oracle::random_unimodular(L.rank(), rng));
        auto T = isometric_definite(L, s);
        if (!T) {
          o.require(false, L.label() + ": scramble not recognised");
          break;
        }
        o.require(T->transpose() * s.gram() * *T == L.gram(), L.label() + ": bad witness");
      }
    }
    Lattice a(IntMatrix{{2, 1}, {1, 12}}), b(IntMatrix{{4, 1}, {1, 6}});
    o.require(oracle::naive_short_vectors(a, 2).size() == 1 && oracle::naive_short_vectors(b, 2).empty(),
              "oracle minima of the det 23 pair");
    o.require(!isometric_definite(a, b), "det 23 pair reported isometric");
    auto g = find_isometry_with_profile(make_catalog(CatalogName::E8), CyclotomicProfile::of({{3, 4}}));
    o.require(g.has_value(), "E8 m3=4 search");
    if (g) {
      o.require(preserves(make_catalog(CatalogName::E8).gram(), g->matrix), "E8 m3=4 isometry");
      o.require(cyclotomic_exponents(g->matrix) == std::map<unsigned, unsigned>{{3, 4}}, "E8 m3=4 oracle profile");
    }
  });

  criterion("AC9", "short vectors against exhaustive search", [&](Outcome& o) {
    std::uniform_int_distribution<int> dim(2, 4), bnd(4, 30);
    for (int t = 0; t < 50; ++t) {
      Lattice L = oracle::random_positive_definite(std::size_t(dim(rng)), rng);
      long b = bnd(rng);
      std::set<IntVector> got;
      for (auto v : short_vectors(L, b)) {
        oracle::canonical_sign(v);
        got.insert(v);
      }
      if (got != oracle::naive_short_vectors(L, b)) o.require(false, "lattice " + std::to_string(t));
    }
  });

  criterion("AC10", "property suites", [&](Outcome& o) {
    for (int t = 0; t < 60; ++t) {
      IntMatrix m = oracle::random_matrix(4, 5, -9, 9, rng);
      auto s = smith_normal_form(m);
      IntMatrix d(4, 5);
      for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
      o.require(s.left * m * s.right == d, "SNF round trip");
      for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
        if (s.diag[i] != 0) o.require(s.diag[i + 1] % s.diag[i] == 0, "SNF divisibility");
    }
    for (const char* e : {"U", "A2(-1)", "V", "U(3)+A1(-1)", "A1+A1(-1)^2", "U(2)+D4(-1)"}) {
      Lattice L = expr(e);
      Signature s = oracle_signature(L, rng);
      o.require(signature(L) == s, std::string(e) + ": signature");
      for (long n : {2L, -3L}) {
        Signature st = signature(twist(L, n));
        o.require(st == (n > 0 ? s : Signature{s.neg, s.pos}), std::string(e) + ": twist signature");
      }
      o.require(discriminant_group(L).order() == delta(L), std::string(e) + ": |disc| = Delta");
      long total = 0;
      for (auto [q, c] : q_histogram(L)) total += c;
      o.require(Integer(total) == delta(L), std::string(e) + ": histogram size");
      Lattice sum = direct_sum({L, make_catalog(CatalogName::U)});
      Signature ss = signature(sum);
      o.require(ss == Signature{s.pos + 1, s.neg + 1}, std::string(e) + ": direct sum signature");
    }
  });

  criterion("AC11", "verification suite", [&](Outcome& o) {
    auto a = run_check_suite();
    auto b = run_check_suite();
    std::set<std::string> flagged;
    for (const auto& c : a.checks) {
      if (c.status == CheckStatus::Fail) o.require(false, c.id + " fails");
      if (c.status == CheckStatus::DiscrepancyFlag) flagged.insert(c.id);
    }
    o.require(flagged == std::set<std::string>{"d.L3.gcd", "d.L6.gcd", "d.L5.gcd", "d.L6prime.gcd",
                                               "balldim.six-points"},
              "unexpected discrepancy flags");
    o.require(a.checks.size() >= 25 && a.checks.size() <= 40, "row count");
    o.require(report_to_json(a).dump(2) == report_to_json(b).dump(2), "output not byte-identical");
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
