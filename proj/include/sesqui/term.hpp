#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/globular.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/monad.hpp"

namespace sesqui {

template <class C>
struct TermNode;

// Operation tree: leaves carry cells of C, internal vertices are the
// generators Comp(i,j) (children of dimension i and j, in that order) and
// Unit(i) (one child of dimension i-1). Immutable, with shared subtrees.
template <class C>
class Term {
 public:
  enum class Kind { Leaf, Comp, Unit };

  Term() = default;

  static Term leaf(C c);
  static Term comp(int i, int j, Term x, Term y);
  static Term unit(int i, Term x);

  Kind kind() const { return n_->kind; }
  bool is_leaf() const { return n_->kind == Kind::Leaf; }
  int i() const { return n_->i; }
  int j() const { return n_->j; }
  const C& cell() const { return *n_->cell; }
  const Term& child(int c) const { return n_->kids[static_cast<std::size_t>(c)]; }
  int arity() const { return static_cast<int>(n_->kids.size()); }

  int dim() const { return n_->dim; }
  int size() const { return n_->size; }
  int height() const { return n_->height; }
  std::size_t hash() const { return n_->hash; }
  const TermNode<C>* node() const { return n_.get(); }

  bool operator==(const Term& o) const { return (*this <=> o) == 0; }
  std::strong_ordering operator<=>(const Term& o) const;

 private:
  explicit Term(std::shared_ptr<const TermNode<C>> n) : n_(std::move(n)) {}
  std::shared_ptr<const TermNode<C>> n_;
};

template <class C>
struct TermNode {
  typename Term<C>::Kind kind;
  int i = 0, j = 0;
  std::optional<C> cell;
  std::vector<Term<C>> kids;
  int dim = 0, size = 1, height = 0;
  std::size_t hash = 0;
  // evaluation is cached per node; subtrees are shared, so this is a memo
  mutable std::optional<Labelled<C>> value;
  // offending vertex, relative to this node
  mutable std::optional<std::vector<int>> bad;
};

namespace detail {

inline std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

inline std::size_t cell_hash(const Cell& c) { return mix(static_cast<std::size_t>(c.dim), static_cast<std::size_t>(c.index)); }
inline std::size_t cell_hash(const Star& s) { return static_cast<std::size_t>(s.dim); }
template <class C>
std::size_t cell_hash(const Term<C>& t) {
  return t.hash();
}
template <class C>
std::size_t cell_hash(const C& c) {
  return static_cast<std::size_t>(cell_dim(c));
}

}  // namespace detail

template <class C>
Term<C> Term<C>::leaf(C c) {
  auto n = std::make_shared<TermNode<C>>();
  n->kind = Kind::Leaf;
  n->dim = cell_dim(c);
  n->hash = detail::mix(17, detail::cell_hash(c));
  n->cell = std::move(c);
  return Term(std::move(n));
}

template <class C>
Term<C> Term<C>::comp(int i, int j, Term x, Term y) {
  if (i < 1 || j < 1) throw Error(ErrorKind::BadIndices, "composition indices start at 1");
  if (x.dim() != i || y.dim() != j)
    throw Error(ErrorKind::DimError, "comp(" + std::to_string(i) + "," + std::to_string(j) + ") needs children of dimension " +
                                         std::to_string(i) + " and " + std::to_string(j));
  auto n = std::make_shared<TermNode<C>>();
  n->kind = Kind::Comp;
  n->i = i;
  n->j = j;
  n->dim = std::max(i, j);
  n->size = 1 + x.size() + y.size();
  n->height = 1 + std::max(x.height(), y.height());
  n->hash = detail::mix(detail::mix(detail::mix(31, static_cast<std::size_t>(i * 16 + j)), x.hash()), y.hash());
  n->kids = {std::move(x), std::move(y)};
  return Term(std::move(n));
}

template <class C>
Term<C> Term<C>::unit(int i, Term x) {
  if (i < 1) throw Error(ErrorKind::BadIndices, "unit index starts at 1");
  if (x.dim() != i - 1)
    throw Error(ErrorKind::DimError, "unit(" + std::to_string(i) + ") needs a child of dimension " + std::to_string(i - 1));
  auto n = std::make_shared<TermNode<C>>();
  n->kind = Kind::Unit;
  n->i = i;
  n->dim = i;
  n->size = 1 + x.size();
  n->height = 1 + x.height();
  n->hash = detail::mix(detail::mix(53, static_cast<std::size_t>(i)), x.hash());
  n->kids = {std::move(x)};
  return Term(std::move(n));
}

// Total order: shape statistics first, then structure. Hash participates only
// as a cheap early split; it is a function of structure, so this is a strict
// total order on trees.
template <class C>
std::strong_ordering Term<C>::operator<=>(const Term& o) const {
  if (n_ == o.n_) return std::strong_ordering::equal;
  if (auto c = size() <=> o.size(); c != 0) return c;
  if (auto c = hash() <=> o.hash(); c != 0) return c;
  if (auto c = static_cast<int>(kind()) <=> static_cast<int>(o.kind()); c != 0) return c;
  if (auto c = i() <=> o.i(); c != 0) return c;
  if (auto c = j() <=> o.j(); c != 0) return c;
  if (is_leaf()) return cell() <=> o.cell();
  for (int c = 0; c < arity(); ++c)
    if (auto r = child(c) <=> o.child(c); r != 0) return r;
  return std::strong_ordering::equal;
}

struct TermHash {
  template <class C>
  std::size_t operator()(const Term<C>& t) const {
    return t.hash();
  }
};

// ---- addresses ----

// Path from the root: 0 is the left (or only) child, 1 the right.
using Address = std::vector<int>;

inline std::string address_string(const Address& a) {
  if (a.empty()) return "root";
  std::string s;
  for (std::size_t q = 0; q < a.size(); ++q) s += (q ? "." : "") + std::to_string(a[q]);
  return s;
}

template <class C>
const Term<C>& subtree(const Term<C>& t, const Address& a) {
  const Term<C>* cur = &t;
  for (int c : a) {
    if (c < 0 || c >= cur->arity()) throw Error(ErrorKind::BadIndices, "address " + address_string(a) + " leaves the tree");
    cur = &cur->child(c);
  }
  return *cur;
}

template <class C>
Term<C> replace_at(const Term<C>& t, const Address& a, const Term<C>& by, std::size_t from = 0) {
  if (from == a.size()) return by;
  int c = a[from];
  if (c < 0 || c >= t.arity()) throw Error(ErrorKind::BadIndices, "address " + address_string(a) + " leaves the tree");
  if (t.kind() == Term<C>::Kind::Unit) return Term<C>::unit(t.i(), replace_at(t.child(0), a, by, from + 1));
  return c == 0 ? Term<C>::comp(t.i(), t.j(), replace_at(t.child(0), a, by, from + 1), t.child(1))
                : Term<C>::comp(t.i(), t.j(), t.child(0), replace_at(t.child(1), a, by, from + 1));
}

// All addresses in preorder.
template <class C>
std::vector<Address> addresses(const Term<C>& t) {
  std::vector<Address> out;
  Address cur;
  std::function<void(const Term<C>&)> go = [&](const Term<C>& s) {
    out.push_back(cur);
    for (int c = 0; c < s.arity(); ++c) {
      cur.push_back(c);
      go(s.child(c));
      cur.pop_back();
    }
  };
  go(t);
  return out;
}

// ---- source and target ----

template <class C>
Term<C> tree_source(const Term<C>& t) {
  using K = typename Term<C>::Kind;
  if (t.dim() == 0) throw Error(ErrorKind::DimZero, "0-dimensional tree has no source");
  switch (t.kind()) {
    case K::Leaf: return Term<C>::leaf(cell_source(t.cell()));
    case K::Unit: return t.child(0);
    case K::Comp: break;
  }
  int i = t.i(), j = t.j();
  if (i == j) return tree_source(t.child(1));
  if (i < j) return Term<C>::comp(i, j - 1, t.child(0), tree_source(t.child(1)));
  return Term<C>::comp(i - 1, j, tree_source(t.child(0)), t.child(1));
}

template <class C>
Term<C> tree_target(const Term<C>& t) {
  using K = typename Term<C>::Kind;
  if (t.dim() == 0) throw Error(ErrorKind::DimZero, "0-dimensional tree has no target");
  switch (t.kind()) {
    case K::Leaf: return Term<C>::leaf(cell_target(t.cell()));
    case K::Unit: return t.child(0);
    case K::Comp: break;
  }
  int i = t.i(), j = t.j();
  if (i == j) return tree_target(t.child(0));
  if (i < j) return Term<C>::comp(i, j - 1, t.child(0), tree_target(t.child(1)));
  return Term<C>::comp(i - 1, j, tree_target(t.child(0)), t.child(1));
}

// Trees are themselves a globular set, so trees of trees work generically.
template <class C>
int cell_dim(const Term<C>& t) {
  return t.dim();
}
template <class C>
Term<C> cell_source(const Term<C>& t) {
  return tree_source(t);
}
template <class C>
Term<C> cell_target(const Term<C>& t) {
  return tree_target(t);
}

// ---- evaluation ----

// Where each child of a generator is glued into its diagram.
inline std::pair<int, int> comp_slot(int i, int j, int child) {
  if (i == j) return child == 0 ? std::make_pair(i, 2) : std::make_pair(i, 1);
  if (i < j) return child == 0 ? std::make_pair(i, 2) : std::make_pair(j, 1);
  return child == 0 ? std::make_pair(i, 1) : std::make_pair(j, 1);
}

namespace detail {

inline Error incompatible(const Address& at) {
  return Error(ErrorKind::IncompatibleAt, "children do not meet at vertex " + address_string(at), -1,
               static_cast<int>(at.size()));
}

template <class C>
const Labelled<C>& eval_node(const Term<C>& t, Address& at) {
  using K = typename Term<C>::Kind;
  const TermNode<C>* n = t.node();
  if (n->value) return *n->value;
  if (n->bad) {
    Address full = at;
    full.insert(full.end(), n->bad->begin(), n->bad->end());
    throw incompatible(full);
  }
  std::size_t depth = at.size();
  auto fail_here = [&](const Address& full) {
    n->bad = Address(full.begin() + static_cast<std::ptrdiff_t>(depth), full.end());
    return incompatible(full);
  };
  auto child = [&](int c) -> const Labelled<C>& {
    at.push_back(c);
    try {
      const auto& v = eval_node(t.child(c), at);
      at.pop_back();
      return v;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IncompatibleAt) throw;
      Address full = at;
      const TermNode<C>* below = t.child(c).node();
      full.insert(full.end(), below->bad->begin(), below->bad->end());
      at.pop_back();
      throw fail_here(full);
    }
  };
  if (t.kind() == K::Leaf) {
    n->value = eta(t.cell());
  } else if (t.kind() == K::Unit) {
    std::map<std::pair<int, int>, Labelled<C>> given{{{t.i() - 1, 1}, child(0)}};
    n->value = mu(expand_min_labelling(unit_diagram(t.i()), given));
  } else {
    int i = t.i(), j = t.j(), m = std::min(i, j);
    const auto& x = child(0);
    const auto& y = child(1);
    if (!(iterated_source(x, i - m + 1) == iterated_target(y, j - m + 1))) throw fail_here(at);
    std::map<std::pair<int, int>, Labelled<C>> given{{comp_slot(i, j, 0), x}, {comp_slot(i, j, 1), y}};
    n->value = mu(expand_min_labelling(comp_diagram(i, j), given));
  }
  return *n->value;
}

}  // namespace detail

// The composite labelled diagram of a tree. Raises IncompatibleAt for the
// first vertex whose children do not meet.
template <class C>
const Labelled<C>& eval_phi(const Term<C>& t) {
  Address at;
  return detail::eval_node(t, at);
}

template <class C>
bool is_valid(const Term<C>& t) {
  try {
    eval_phi(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Throws IncompatibleAt naming the offending vertex, or returns t.
template <class C>
const Term<C>& tree_validate(const Term<C>& t) {
  eval_phi(t);
  return t;
}

template <class C, class F>
auto map_leaves(const Term<C>& t, F&& f) -> Term<std::decay_t<decltype(f(t.cell()))>> {
  using D = std::decay_t<decltype(f(t.cell()))>;
  using K = typename Term<C>::Kind;
  switch (t.kind()) {
    case K::Leaf: return Term<D>::leaf(f(t.cell()));
    case K::Unit: return Term<D>::unit(t.i(), map_leaves(t.child(0), f));
    case K::Comp: break;
  }
  return Term<D>::comp(t.i(), t.j(), map_leaves(t.child(0), f), map_leaves(t.child(1), f));
}

// Substitute the tree on each leaf.
template <class C>
Term<C> graft(const Term<Term<C>>& outer) {
  using K = typename Term<Term<C>>::Kind;
  switch (outer.kind()) {
    case K::Leaf: return outer.cell();
    case K::Unit: return Term<C>::unit(outer.i(), graft(outer.child(0)));
    case K::Comp: break;
  }
  return Term<C>::comp(outer.i(), outer.j(), graft(outer.child(0)), graft(outer.child(1)));
}

// ---- statistics ----

struct TreeStats {
  int height = 0;
  int vertices = 0;
  bool nondegenerate = true;
  int H = 0;
  std::optional<int> m, M;
};

template <class C>
TreeStats tree_stats(const Term<C>& t) {
  using K = typename Term<C>::Kind;
  TreeStats s;
  s.height = t.height();
  s.vertices = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(t.dim() + 1), false);
  std::function<void(const Term<C>&)> go = [&](const Term<C>& u) {
    if (u.kind() == K::Unit) s.nondegenerate = false;
    if (u.kind() == K::Comp) {
      int lv = std::min(u.i(), u.j());
      seen[static_cast<std::size_t>(lv)] = true;
      if (!s.m || lv < *s.m) s.m = lv;
      if (!s.M || lv > *s.M) s.M = lv;
    }
    for (int c = 0; c < u.arity(); ++c) go(u.child(c));
  };
  go(t);
  for (bool b : seen) s.H += b ? 1 : 0;
  return s;
}

}  // namespace sesqui
