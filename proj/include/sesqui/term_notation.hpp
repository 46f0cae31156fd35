#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "sesqui/error.hpp"
#include "sesqui/globular.hpp"
#include "sesqui/notation.hpp"
#include "sesqui/term.hpp"

// Term notation:
//   #name | #"any name"         a leaf labelled by a cell of X
//   comp(i,j; left, right)      Comp(i,j)
//   unit(i; child)              Unit(i)

namespace sesqui {

namespace detail {

inline bool plain_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '-';
}

inline bool keyword(Scanner& sc, std::string_view word) {
  sc.skip();
  auto r = sc.rest();
  if (r.substr(0, word.size()) != word) return false;
  if (r.size() > word.size() && plain_name_char(r[word.size()])) return false;
  sc.advance(word.size());
  return true;
}

inline std::string cell_token(Scanner& sc) {
  sc.expect('#');
  std::string name;
  if (sc.current() == '"') {
    sc.advance(1);
    while (sc.current() != '"') {
      if (sc.current() == '\0') sc.fail("unterminated quoted name");
      if (sc.current() == '\\') sc.advance(1);
      name += sc.current();
      sc.advance(1);
    }
    sc.advance(1);
  } else {
    while (plain_name_char(sc.current())) {
      name += sc.current();
      sc.advance(1);
    }
  }
  if (name.empty()) sc.fail("empty cell name");
  return name;
}

inline Term<Cell> term_expr(Scanner& sc, const GlobularSet& x) {
  if (sc.peek('#')) {
    std::size_t at = sc.pos();
    std::string name = cell_token(sc);
    auto f = x.find(name);
    if (!f) throw Error(ErrorKind::UnknownCell, "no cell named " + name, -1, static_cast<int>(at));
    return Term<Cell>::leaf(Cell{&x, f->first, f->second});
  }
  std::size_t at = sc.pos();
  if (keyword(sc, "comp")) {
    sc.expect('(');
    int i = sc.integer();
    sc.expect(',');
    int j = sc.integer();
    sc.expect(';');
    auto l = term_expr(sc, x);
    if (!sc.accept(',')) throw Error(ErrorKind::ArityError, "comp takes two arguments", -1, static_cast<int>(sc.pos()));
    auto r = term_expr(sc, x);
    if (sc.peek(',')) throw Error(ErrorKind::ArityError, "comp takes two arguments", -1, static_cast<int>(sc.pos()));
    sc.expect(')');
    try {
      return Term<Cell>::comp(i, j, l, r);
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), -1, static_cast<int>(at));
    }
  }
  if (keyword(sc, "unit")) {
    sc.expect('(');
    int i = sc.integer();
    sc.expect(';');
    auto c = term_expr(sc, x);
    if (sc.peek(',')) throw Error(ErrorKind::ArityError, "unit takes one argument", -1, static_cast<int>(sc.pos()));
    sc.expect(')');
    try {
      return Term<Cell>::unit(i, c);
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), -1, static_cast<int>(at));
    }
  }
  sc.fail("expected '#', 'comp' or 'unit'");
}

}  // namespace detail

// Parses the shape only; compatibility is checked by tree_validate.
inline Term<Cell> parse_term(std::string_view text, const GlobularSet& x) {
  detail::Scanner sc(text);
  auto t = detail::term_expr(sc, x);
  if (!sc.done()) sc.fail("trailing input");
  return t;
}

inline std::string print_cell_token(const std::string& name) {
  bool plain = !name.empty();
  for (char c : name) plain = plain && detail::plain_name_char(c);
  if (plain) return "#" + name;
  std::string out = "#\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string print_term(const Term<Cell>& t) {
  using K = Term<Cell>::Kind;
  switch (t.kind()) {
    case K::Leaf: return print_cell_token(t.cell().name());
    case K::Unit: return "unit(" + std::to_string(t.i()) + "; " + print_term(t.child(0)) + ")";
    case K::Comp: break;
  }
  return "comp(" + std::to_string(t.i()) + "," + std::to_string(t.j()) + "; " + print_term(t.child(0)) + ", " +
         print_term(t.child(1)) + ")";
}

}  // namespace sesqui
