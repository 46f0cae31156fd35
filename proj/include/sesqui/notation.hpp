#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"

namespace sesqui {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  bool done() {
    skip();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }
  char current() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_), -1, static_cast<int>(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SimpleDiagram parse_notation(std::string_view text) {
  detail::Scanner sc(text);
  sc.expect('(');
  if (sc.accept(')')) {
    if (!sc.done()) sc.fail("trailing input");
    return SimpleDiagram();
  }
  std::vector<std::vector<int>> levels{{sc.integer()}};
  while (sc.accept(',')) {
    sc.expect('(');
    std::vector<int> v;
    if (!sc.accept(')')) {
      do v.push_back(sc.integer());
      while (sc.accept(','));
      sc.expect(')');
    }
    levels.push_back(std::move(v));
  }
  sc.expect(')');
  if (!sc.done()) sc.fail("trailing input");
  return validate_diagram(static_cast<int>(levels.size()), levels);
}

inline std::string print_notation(const SimpleDiagram& d) {
  if (d.dim() == 0) return "()";
  std::string out = "(" + std::to_string(d.length(1));
  for (int m = 2; m <= d.dim(); ++m) {
    out += ",(";
    for (int i = 1; i <= d.length(m); ++i) {
      if (i > 1) out += ",";
      out += std::to_string(d.parent(m, i));
    }
    out += ")";
  }
  return out + ")";
}

}  // namespace sesqui
