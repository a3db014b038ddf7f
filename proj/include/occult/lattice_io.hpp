// Line-oriented text format for lattices and isometries:
//
//   lattice <name>        (or: isometry <name>)
//   rank <r>
//   <r rows of r space-separated integers>
//
// '#' starts a comment; blank lines are ignored.

#ifndef OCCULT_LATTICE_IO_HPP_
#define OCCULT_LATTICE_IO_HPP_

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace occult {

struct ParseError : Error {
  ParseError(const std::string& source, int line, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

struct MatrixRecord {
  std::string kind;  // "lattice" or "isometry"
  std::string name;
  IntMatrix matrix;
};

inline MatrixRecord read_matrix_record(std::istream& in, const std::string& source = "<input>") {
  MatrixRecord rec;
  std::string raw;
  int lineno = 0;
  std::size_t rank = 0;
  bool have_rank = false;
  std::size_t row = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (rec.kind.empty()) {
      if (first != "lattice" && first != "isometry")
        throw ParseError(source, lineno, "expected 'lattice <name>' or 'isometry <name>'");
      rec.kind = first;
      if (!(ls >> rec.name)) throw ParseError(source, lineno, "missing name after '" + first + "'");
      std::string extra;
      if (ls >> extra) throw ParseError(source, lineno, "unexpected text after the name");
      continue;
    }
    if (!have_rank) {
      long r = 0;
      if (first != "rank" || !(ls >> r)) throw ParseError(source, lineno, "expected 'rank <r>'");
      if (r < 1) throw ParseError(source, lineno, "rank must be positive");
      std::string extra;
      if (ls >> extra) throw ParseError(source, lineno, "unexpected text after the rank");
      rank = std::size_t(r);
      have_rank = true;
      rec.matrix = IntMatrix(rank, rank);
      continue;
    }
    if (row == rank) throw ParseError(source, lineno, "more than " + std::to_string(rank) + " matrix rows");
    std::istringstream rs(line);
    std::string tok;
    std::size_t col = 0;
    while (rs >> tok) {
      if (col == rank) throw ParseError(source, lineno, "row has more than " + std::to_string(rank) + " entries");
      Integer v;
      if (v.set_str(tok, 10) != 0) throw ParseError(source, lineno, "not an integer: '" + tok + "'");
      rec.matrix(row, col++) = v;
    }
    if (col != rank)
      throw ParseError(source, lineno, "row has " + std::to_string(col) + " entries, expected " + std::to_string(rank));
    ++row;
  }
  if (rec.kind.empty()) throw ParseError(source, lineno, "empty input");
  if (!have_rank) throw ParseError(source, lineno, "missing 'rank' line");
  if (row != rank)
    throw ParseError(source, lineno, "expected " + std::to_string(rank) + " matrix rows, found " + std::to_string(row));
  return rec;
}

inline Lattice parse_lattice(std::istream& in, const std::string& source = "<input>") {
  MatrixRecord rec = read_matrix_record(in, source);
  if (rec.kind != "lattice") fail(source + ": expected a lattice file, found '" + rec.kind + "'");
  if (!rec.matrix.is_symmetric()) fail(source + ": Gram matrix is not symmetric");
  if (determinant(rec.matrix) == 0) fail(source + ": Gram matrix is degenerate (determinant 0)");
  return Lattice(rec.matrix, rec.name);
}

inline Lattice parse_lattice_string(const std::string& text, const std::string& source = "<string>") {
  std::istringstream in(text);
  return parse_lattice(in, source);
}

inline Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return parse_lattice(in, path);
}

inline MatrixRecord load_isometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  MatrixRecord rec = read_matrix_record(in, path);
  if (rec.kind != "isometry") fail(path + ": expected an isometry file, found '" + rec.kind + "'");
  return rec;
}

inline void write_matrix_record(std::ostream& out, const std::string& kind, const std::string& name,
                                const IntMatrix& m) {
  out << kind << ' ' << (name.empty() ? "unnamed" : name) << '\n' << "rank " << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

inline void write_lattice(std::ostream& out, const Lattice& L) {
  std::string name = L.label();
  for (char& c : name)
    if (c == ' ') c = '_';
  write_matrix_record(out, "lattice", name, L.gram());
}

}  // namespace occult

#endif  // OCCULT_LATTICE_IO_HPP_
