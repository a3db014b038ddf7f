// Command-line driver: lattice invariants, d-values, embeddings,
// complements, isometry profiles, group orders and the verification suite.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "occult/occult.hpp"

using namespace occult;

namespace {

// A lattice argument is a file path if one exists, else a catalog expression.
Lattice resolve_lattice(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_lattice_file(arg);
  return default_catalog().evaluate(arg);
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

void print_form(std::ostream& out, const DiscriminantForm& f) {
  out << "group: " << f.group.str() << '\n';
  if (f.size() == 0) return;
  if (f.has_q) {
    out << "q:";
    for (const auto& q : f.q_values) out << ' ' << q;
    out << "  (mod 2)\n";
  }
  out << "b:  (mod 1)\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << ' ';
    for (std::size_t j = 0; j < f.size(); ++j) out << ' ' << f.b_matrix(i, j);
    out << '\n';
  }
}

int cmd_info(const std::string& arg) {
  Lattice L = resolve_lattice(arg);
  std::cout << "lattice:   " << L.label() << '\n'
            << "rank:      " << L.rank() << '\n'
            << "det:       " << determinant(L) << '\n'
            << "signature: " << signature(L).str() << '\n'
            << "parity:    " << (is_even(L) ? "even" : "odd") << '\n'
            << "disc:      " << discriminant_group(L).str() << '\n';
  return 0;
}

int cmd_disc(const std::string& arg, const Settings&) {
  Lattice L = resolve_lattice(arg);
  DiscriminantForm f = discriminant_form_unchecked(L);
  if (!f.has_q) std::cout << "odd lattice: only the bilinear form is defined\n";
  print_form(std::cout, f);
  return 0;
}

int cmd_dvalue(const std::string& arg, long box, const Settings& s) {
  Lattice L = resolve_lattice(arg);
  DValue d = d_value(L, SearchBox(box), s.stabilization_window);
  std::cout << "gcd:            " << d.gcd << '\n'
            << "content bound:  " << d.certified_lower_bound << '\n'
            << "exact:          " << (d.exact() ? "yes" : "no") << '\n'
            << "stabilized:     " << (d.stabilized ? "yes" : "no") << '\n';
  for (const auto& w : d.witnesses) std::cout << "witness:        " << vector_str(w.vector) << " degree " << w.degree << '\n';
  return 0;
}

int cmd_embed(const std::string& m, const std::string& l, long box, const Settings& s) {
  Lattice M = resolve_lattice(m), L = resolve_lattice(l);
  auto e = find_primitive_embedding(M, L, SearchBox(box), s.embedding_limits());
  if (!e) {
    std::cout << "not found within box " << box << '\n';
    return 0;
  }
  std::cout << "primitive embedding (columns are images of the basis of " << M.label() << "):\n";
  print_matrix(std::cout, e->matrix);
  return 0;
}

int cmd_complement(const std::string& m, const std::string& l, long box, const Settings& s) {
  Lattice M = resolve_lattice(m), L = resolve_lattice(l);
  std::optional<EmbeddingMap> e;
  if (const CatalogEntry* entry = default_catalog().find(m);
      entry && entry->embedding_witness && entry->embedding_witness->target == L)
    e = entry->embedding_witness;
  if (!e) e = find_primitive_embedding(M, L, SearchBox(box), s.embedding_limits());
  if (!e) {
    std::cout << "no primitive embedding found within box " << box << '\n';
    return 1;
  }
  Complement c = orthogonal_complement(*e);
  if (!c.lattice) {
    std::cout << "complement has rank 0\n";
    return 0;
  }
  write_lattice(std::cout, c.lattice->relabeled(M.label() + "perp"));
  std::cout << "# " << invariants_str(*c.lattice) << '\n';
  return 0;
}

int cmd_match(const std::string& a, const std::string& b, const Settings& s) {
  Lattice A = resolve_lattice(a), B = resolve_lattice(b);
  bool inv = invariants_match(A, B, s.disc_form_bound);
  std::cout << "invariants: " << (inv ? "match" : "differ") << '\n';
  if (inv && signature(A).definite()) {
    auto t = isometric_definite(A, B, s.isometry_limits());
    std::cout << "isometry:   " << (t ? "found" : "none") << '\n';
    if (t) print_matrix(std::cout, *t);
    return 0;
  }
  if (inv) std::cout << "(indefinite: decided by invariants)\n";
  return 0;
}

int cmd_profile(const std::string& l, const std::string& file, const Settings& s) {
  Lattice L = resolve_lattice(l);
  MatrixRecord rec = load_isometry_file(file);
  Isometry g = verify_isometry(L, rec.matrix);
  auto ord = order_of(g, s.order_cutoff);
  if (!ord) {
    std::cout << "order:   exceeds " << s.order_cutoff << '\n';
    return 0;
  }
  FixedSublattice fix = fixed_sublattice(g);
  std::cout << "order:   " << *ord << '\n'
            << "profile: " << cyclotomic_profile(g, s.order_cutoff).str() << '\n'
            << "fixed:   rank " << (fix.lattice ? fix.lattice->rank() : 0) << '\n'
            << "disc:    " << (disc_action_trivial(g) ? "acts trivially" : "acts nontrivially") << '\n';
  return 0;
}

CyclotomicProfile parse_profile(const std::vector<std::string>& items) {
  CyclotomicProfile p;
  for (const auto& it : items) {
    auto colon = it.find(':');
    if (colon == std::string::npos) fail("profile entries look like k:m, got '" + it + "'");
    unsigned k = unsigned(std::stoul(it.substr(0, colon)));
    unsigned m = unsigned(std::stoul(it.substr(colon + 1)));
    if (k == 0) fail("cyclotomic index must be positive");
    if (m) p.multiplicities[k] = m;
  }
  return p;
}

int cmd_balldim(unsigned n, const std::vector<std::string>& profile, std::size_t invariant_rank, const Settings& s) {
  if (n) {
    MuActionDatum d{n, parse_profile(profile), invariant_rank};
    std::cout << ball_dimension(d) << '\n';
    return 0;
  }
  for (const auto& c : ball_cases(default_catalog(), s)) {
    MuActionDatum d = ball_datum(c, s.order_cutoff);
    std::cout << c.id << ": " << ball_dimension(d) << "  (n=" << d.n << ", " << d.profile.str() << ")\n";
  }
  return 0;
}

int cmd_grouporder(const std::vector<std::string>& args, const Settings& s) {
  std::vector<std::pair<std::string, Lattice>> todo;
  if (args.empty()) {
    for (const char* id : {"L5", "L6prime"})
      todo.emplace_back(std::string(id) + "perp", complement_of(default_catalog().at(id)));
  } else {
    for (const auto& a : args) todo.emplace_back(a, resolve_lattice(a));
  }
  for (const auto& [name, L] : todo) {
    DiscriminantForm q = discriminant_form(L);
    std::cout << name << ": |O(q)| = " << orthogonal_group_order_mod_p(q, s.group_caps()) << " on " << q.group.str()
              << '\n';
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& format, bool timings, const Settings& s) {
  SuiteOptions opts{only, timings};
  VerificationReport r = run_check_suite(opts, s);
  emit_report(std::cout, r, format == "json" ? ReportFormat::Json : ReportFormat::Text);
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"occult: integral lattices for period maps of K3-type moduli"};
  app.require_subcommand(1);

  std::string a, b;
  long box = 6;
  bool box_given = false;

  auto* info = app.add_subcommand("info", "rank, determinant, signature, parity and discriminant group");
  info->add_option("lattice", a, "lattice file or catalog expression")->required();

  auto* disc = app.add_subcommand("disc", "discriminant group and form");
  disc->add_option("lattice", a, "lattice file or catalog expression")->required();

  auto* dval = app.add_subcommand("dvalue", "d(L) with certificates");
  dval->add_option("lattice", a, "lattice file or catalog expression")->required();
  dval->add_option("--box", box, "coefficient bound")->check(CLI::PositiveNumber);

  auto* embed = app.add_subcommand("embed", "search for a primitive embedding M -> L");
  embed->add_option("M", a)->required();
  embed->add_option("L", b)->required();
  embed->add_option("--box", box, "coefficient bound")->check(CLI::PositiveNumber);

  auto* comp = app.add_subcommand("complement", "orthogonal complement of M in L");
  comp->add_option("M", a)->required();
  comp->add_option("L", b)->required();
  comp->add_option("--box", box, "coefficient bound for the embedding search")->check(CLI::PositiveNumber);

  auto* match = app.add_subcommand("match", "compare two lattices");
  match->add_option("L1", a)->required();
  match->add_option("L2", b)->required();

  auto* prof = app.add_subcommand("profile", "order and cyclotomic profile of an isometry");
  prof->add_option("lattice", a)->required();
  prof->add_option("isometry-file", b)->required()->check(CLI::ExistingFile);

  unsigned n = 0;
  std::vector<std::string> profile;
  std::size_t invariant_rank = 0;
  auto* ball = app.add_subcommand("balldim", "period-domain dimensions (catalog cases, or a given datum)");
  ball->add_option("--n", n, "order of the action");
  ball->add_option("--profile", profile, "multiplicities as k:m")->delimiter(',');
  ball->add_option("--invariant-rank", invariant_rank, "rank of the invariant lattice");

  std::vector<std::string> lattices;
  auto* grp = app.add_subcommand("grouporder", "|O(q)| of elementary abelian discriminant forms");
  grp->add_option("lattices", lattices, "lattices (default: the five- and six-point complements)");

  std::vector<std::string> only;
  std::string format = "text";
  bool timings = false;
  auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
  verify->add_option("--only", only, "check ids or dotted prefixes")->delimiter(',');
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", timings, "include runtimes (output is then not reproducible)");

  CLI11_PARSE(app, argc, argv);

  try {
    Settings s = load_settings();
    for (auto* sub : {dval, embed, comp})
      if (sub->count("--box")) box_given = true;
    if (!box_given) box = s.search_box;

    if (*info) return cmd_info(a);
    if (*disc) return cmd_disc(a, s);
    if (*dval) return cmd_dvalue(a, box, s);
    if (*embed) return cmd_embed(a, b, box, s);
    if (*comp) return cmd_complement(a, b, box, s);
    if (*match) return cmd_match(a, b, s);
    if (*prof) return cmd_profile(a, b, s);
    if (*ball) return cmd_balldim(n, profile, invariant_rank, s);
    if (*grp) return cmd_grouporder(lattices, s);
    if (*verify) return cmd_verify(only, format, timings, s);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
