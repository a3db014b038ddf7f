// Small expression language for catalog lattices:
//
//   sum  := term ('+' term)*
//   term := atom ['(' int ')'] ['^' int]      twist, then orthogonal power
//   atom := U | V | E6 | E8 | A<n> | D<n> | <n> | LK3 | '[' sum ']' | name
//
// <n> is the rank-one lattice with Gram (n). Other names are passed to a
// resolver (used for the catalog entries L4, L3, ...).

#ifndef OCCULT_EXPRESSION_HPP_
#define OCCULT_EXPRESSION_HPP_

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace occult {

using NameResolver = std::function<std::optional<Lattice>(const std::string&)>;

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string text, const NameResolver& resolver) : s_(std::move(text)), resolver_(resolver) {}

  Lattice parse() {
    Lattice out = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail("lattice expression '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) error("integer too large");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  Lattice sum() {
    std::vector<Lattice> parts{term()};
    while (accept('+')) parts.push_back(term());
    return parts.size() == 1 ? parts.front() : direct_sum(parts);
  }

  Lattice term() {
    Lattice base = atom();
    if (accept('(')) {
      long n = integer();
      expect(')');
      if (n == 0) error("twist by zero");
      base = twist(base, n);
    }
    if (accept('^')) {
      long k = integer();
      if (k < 1) error("power must be positive");
      base = power_sum(base, std::size_t(k));
    }
    return base;
  }

  Lattice atom() {
    skip();
    if (accept('[')) {
      Lattice inner = sum();
      expect(']');
      return inner;
    }
    if (accept('<')) {
      long n = integer();
      expect('>');
      if (n == 0) error("<0> is degenerate");
      return Lattice(IntMatrix{{n}}, "<" + std::to_string(n) + ">");
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a lattice name");
    std::string word = s_.substr(start, pos_ - start);
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string tail = s_.substr(digits, pos_ - digits);
    std::string name = word + tail;

    if (resolver_) {
      if (auto hit = resolver_(name)) return *hit;
    }
    if (name == "U") return make_catalog(CatalogName::U);
    if (name == "V") return make_catalog(CatalogName::V);
    if (name == "E6") return make_catalog(CatalogName::E6);
    if (name == "E8") return make_catalog(CatalogName::E8);
    if (name == "LK3") return k3_lattice();
    if ((word == "A" || word == "D") && !tail.empty() &&
        tail.find_first_not_of("0123456789") == std::string::npos) {
      if (tail.size() > 3) error("index too large");
      long n = std::stol(tail);
      return make_catalog(word == "A" ? CatalogName::A : CatalogName::D, n);
    }
    pos_ = start;
    error("unknown lattice '" + name + "'");
  }

  std::string s_;
  const NameResolver& resolver_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Lattice parse_lattice_expression(const std::string& text, const NameResolver& resolver = {}) {
  Lattice out = detail::ExpressionParser(text, resolver).parse();
  return out.relabeled(text);
}

}  // namespace occult

#endif  // OCCULT_EXPRESSION_HPP_
