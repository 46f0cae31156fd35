#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sesqui/error.hpp"
#include "sesqui/term.hpp"

namespace sesqui {

enum class RuleId { L_ik, R_ki, R_ik, L_ki, C_kkk, C_iik, C_iki, C_kii, C_ikk, C_kki, C_ijk, C_ikj, C_jki, C_kji };
enum class Direction { L2R, R2L };

inline constexpr std::array<RuleId, 14> all_rules{RuleId::L_ik,  RuleId::R_ki,  RuleId::R_ik,  RuleId::L_ki,  RuleId::C_kkk,
                                                  RuleId::C_iik, RuleId::C_iki, RuleId::C_kii, RuleId::C_ikk, RuleId::C_kki,
                                                  RuleId::C_ijk, RuleId::C_ikj, RuleId::C_jki, RuleId::C_kji};

inline std::string_view rule_name(RuleId r) {
  static constexpr std::array<std::string_view, 14> names{"L_ik",  "R_ki",  "R_ik",  "L_ki",  "C_kkk", "C_iik", "C_iki",
                                                          "C_kii", "C_ikk", "C_kki", "C_ijk", "C_ikj", "C_jki", "C_kji"};
  return names[static_cast<std::size_t>(r)];
}

inline std::optional<RuleId> rule_from_name(std::string_view s) {
  for (RuleId r : all_rules)
    if (rule_name(r) == s) return r;
  return std::nullopt;
}

// ---- patterns ----

// Index expressions are a rule variable plus an offset: k-1 is {'k', -1}.
struct IndexExpr {
  char var;
  int offset = 0;
};

struct Pattern {
  enum class Kind { Var, Comp, Unit } kind;
  char var = 0;
  IndexExpr a{}, b{};
  std::vector<Pattern> kids;
};

namespace pat {

inline Pattern V(char x) { return {Pattern::Kind::Var, x, {}, {}, {}}; }
inline Pattern C(IndexExpr a, IndexExpr b, Pattern x, Pattern y) {
  return {Pattern::Kind::Comp, 0, a, b, {std::move(x), std::move(y)}};
}
inline Pattern U(IndexExpr a, Pattern x) { return {Pattern::Kind::Unit, 0, a, {}, {std::move(x)}}; }

}  // namespace pat

struct Rule {
  RuleId id;
  Pattern lhs, rhs;
  // constraint on the index variables i, j, k
  std::function<bool(int, int, int)> ok;
  // the R2L direction copies a subtree, so its two copies must agree and the
  // result is re-validated
  bool distributive = false;
};

inline const std::vector<Rule>& rule_table() {
  using namespace pat;
  static const std::vector<Rule> table = [] {
    IndexExpr i{'i'}, j{'j'}, k{'k'}, k1{'k', -1};
    auto le = [](int a, int, int c) { return 1 <= a && a <= c; };
    auto lt = [](int a, int, int c) { return 1 <= a && a < c; };
    auto any = [](int, int, int c) { return c >= 1; };
    auto chain = [](int a, int b, int c) { return 1 <= a && a < b && b < c; };
    auto x = V('x'), y = V('y'), z = V('z');
    std::vector<Rule> t;
    t.push_back({RuleId::L_ik, C(i, k, U(i, x), y), y, le});
    t.push_back({RuleId::R_ki, C(k, i, x, U(i, y)), x, le});
    t.push_back({RuleId::R_ik, C(i, k, x, U(k, y)), U(k, C(i, k1, x, y)), lt});
    t.push_back({RuleId::L_ki, C(k, i, U(k, x), y), U(k, C(k1, i, x, y)), lt});
    t.push_back({RuleId::C_kkk, C(k, k, C(k, k, x, y), z), C(k, k, x, C(k, k, y, z)), any});
    t.push_back({RuleId::C_iik, C(i, k, C(i, i, x, y), z), C(i, k, x, C(i, k, y, z)), lt});
    t.push_back({RuleId::C_iki, C(k, i, C(i, k, x, y), z), C(i, k, x, C(k, i, y, z)), lt});
    t.push_back({RuleId::C_kii, C(k, i, C(k, i, x, y), z), C(k, i, x, C(i, i, y, z)), lt});
    t.push_back({RuleId::C_ikk, C(i, k, x, C(k, k, y, z)), C(k, k, C(i, k, x, y), C(i, k, x, z)), lt, true});
    t.push_back({RuleId::C_kki, C(k, i, C(k, k, x, y), z), C(k, k, C(k, i, x, z), C(k, i, y, z)), lt, true});
    t.push_back({RuleId::C_ijk, C(i, k, x, C(j, k, y, z)), C(j, k, C(i, j, x, y), C(i, k, x, z)), chain, true});
    t.push_back({RuleId::C_ikj, C(i, k, x, C(k, j, y, z)), C(k, j, C(i, k, x, y), C(i, j, x, z)), chain, true});
    t.push_back({RuleId::C_jki, C(k, i, C(j, k, x, y), z), C(j, k, C(j, i, x, z), C(k, i, y, z)), chain, true});
    t.push_back({RuleId::C_kji, C(k, i, C(k, j, x, y), z), C(k, j, C(k, i, x, z), C(j, i, y, z)), chain, true});
    return t;
  }();
  return table;
}

inline const Rule& rule(RuleId r) { return rule_table()[static_cast<std::size_t>(r)]; }

namespace detail {

template <class C>
struct Binding {
  std::map<char, int> idx;
  std::map<char, Term<C>> vars;
};

inline bool bind_index(std::map<char, int>& idx, IndexExpr e, int value) {
  int v = value - e.offset;
  auto [it, fresh] = idx.emplace(e.var, v);
  return fresh || it->second == v;
}

// Repeated variables must match syntactically equal subtrees.
template <class C>
bool match(const Pattern& p, const Term<C>& t, Binding<C>& b) {
  using K = typename Term<C>::Kind;
  switch (p.kind) {
    case Pattern::Kind::Var: {
      auto [it, fresh] = b.vars.emplace(p.var, t);
      return fresh || it->second == t;
    }
    case Pattern::Kind::Unit:
      return t.kind() == K::Unit && bind_index(b.idx, p.a, t.i()) && match(p.kids[0], t.child(0), b);
    case Pattern::Kind::Comp:
      return t.kind() == K::Comp && bind_index(b.idx, p.a, t.i()) && bind_index(b.idx, p.b, t.j()) &&
             match(p.kids[0], t.child(0), b) && match(p.kids[1], t.child(1), b);
  }
  return false;
}

inline int index_value(const std::map<char, int>& idx, IndexExpr e) { return idx.at(e.var) + e.offset; }

template <class C>
Term<C> build(const Pattern& p, const Binding<C>& b) {
  switch (p.kind) {
    case Pattern::Kind::Var: return b.vars.at(p.var);
    case Pattern::Kind::Unit: return Term<C>::unit(index_value(b.idx, p.a), build(p.kids[0], b));
    case Pattern::Kind::Comp:
      break;
  }
  return Term<C>::comp(index_value(b.idx, p.a), index_value(b.idx, p.b), build(p.kids[0], b), build(p.kids[1], b));
}

inline bool constraint_holds(const Rule& r, const std::map<char, int>& idx) {
  auto get = [&](char c) {
    auto it = idx.find(c);
    return it == idx.end() ? 0 : it->second;
  };
  return r.ok(get('i'), get('j'), get('k'));
}

}  // namespace detail

namespace detail {

enum class Outcome { Ok, Mismatch, SideCondition };

// The rewritten subtree, without exceptions on the common no-match path.
template <class C>
Outcome rewrite_here(const Term<C>& s, RuleId id, Direction dir, std::optional<int> param, Term<C>& out) {
  const Rule& r = rule(id);
  const Pattern& from = dir == Direction::L2R ? r.lhs : r.rhs;
  const Pattern& to = dir == Direction::L2R ? r.rhs : r.lhs;
  Binding<C> b;
  if (!match(from, s, b)) return Outcome::Mismatch;
  if (dir == Direction::R2L && (id == RuleId::L_ik || id == RuleId::R_ki)) {
    int k = s.dim();
    if (!param) return Outcome::Mismatch;
    b.idx['k'] = k;
    b.idx['i'] = *param;
    if (!constraint_holds(r, b.idx)) return Outcome::Mismatch;
    const Term<C> kept = b.vars.begin()->second;
    if (id == RuleId::L_ik)
      b.vars['x'] = iterated_target(kept, k - *param + 1);
    else
      b.vars['y'] = iterated_source(kept, k - *param + 1);
  } else if (!constraint_holds(r, b.idx)) {
    return Outcome::Mismatch;
  }
  out = build(to, b);
  if (dir == Direction::R2L && r.distributive && !is_valid(out)) return Outcome::SideCondition;
  return Outcome::Ok;
}

inline bool inserts_unit(RuleId id, Direction dir) {
  return dir == Direction::R2L && (id == RuleId::L_ik || id == RuleId::R_ki);
}

}  // namespace detail

// Rewrite the subtree at `at`. The R2L direction of L_ik and R_ki introduces a
// unit whose index is not visible on the right-hand side; pass it as `param`
// (the inserted subtree is the matching iterated target, resp. source).
template <class C>
Term<C> apply_rule(const Term<C>& t, RuleId id, const Address& at, Direction dir, std::optional<int> param = std::nullopt) {
  Term<C> out;
  switch (detail::rewrite_here(subtree(t, at), id, dir, param, out)) {
    case detail::Outcome::Ok: return replace_at(t, at, out);
    case detail::Outcome::SideCondition:
      throw Error(ErrorKind::SideConditionFailed, std::string(rule_name(id)) + " side conditions fail at " + address_string(at));
    case detail::Outcome::Mismatch: break;
  }
  if (detail::inserts_unit(id, dir) && !param)
    throw Error(ErrorKind::PatternMismatch, std::string(rule_name(id)) + " right to left needs the unit index");
  throw Error(ErrorKind::PatternMismatch, std::string(rule_name(id)) + " does not match at " + address_string(at));
}

template <class C>
struct Rewrite {
  RuleId rule;
  Address at;
  Direction dir;
  std::optional<int> param;
  Term<C> result;
};

// Every single-step rewrite of t, at every address.
template <class C>
std::vector<Rewrite<C>> rewrites(const Term<C>& t) {
  std::vector<Rewrite<C>> out;
  for (const auto& at : addresses(t)) {
    const Term<C>& s = subtree(t, at);
    for (RuleId id : all_rules)
      for (Direction dir : {Direction::L2R, Direction::R2L}) {
        bool unit = detail::inserts_unit(id, dir);
        for (int p = unit ? 1 : 0; p <= (unit ? s.dim() : 0); ++p) {
          std::optional<int> param = unit ? std::optional<int>(p) : std::nullopt;
          Term<C> r;
          if (detail::rewrite_here(s, id, dir, param, r) == detail::Outcome::Ok)
            out.push_back({id, at, dir, param, replace_at(t, at, r)});
        }
      }
  }
  return out;
}

template <class C>
struct Closure {
  std::set<Term<C>> trees;
  // rewrites whose result exceeded the size bound
  int escaped = 0;
};

// Breadth-first closure under all rules in both directions, at every address,
// keeping trees with at most `bound` vertices.
template <class C>
Closure<C> rewrite_closure(const Term<C>& t, int bound) {
  Closure<C> c;
  std::deque<Term<C>> todo;
  if (t.size() > bound) throw Error(ErrorKind::BoundExceeded, "the starting tree is already over the bound");
  c.trees.insert(t);
  todo.push_back(t);
  while (!todo.empty()) {
    Term<C> cur = todo.front();
    todo.pop_front();
    for (auto& r : rewrites(cur)) {
      if (r.result.size() > bound) {
        ++c.escaped;
        continue;
      }
      if (c.trees.insert(r.result).second) todo.push_back(r.result);
    }
  }
  return c;
}

}  // namespace sesqui
