#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"

namespace sesqui {

class GlobularSet {
 public:
  explicit GlobularSet(int n = 0) { resize(n); }

  int n() const { return static_cast<int>(names_.size()) - 1; }
  int count(int dim) const { return dim < 0 || dim > n() ? 0 : static_cast<int>(names_[static_cast<std::size_t>(dim)].size()); }

  // src/tgt are indices into dimension dim-1; ignored for dim 0.
  int add(int dim, const std::string& name, int src = -1, int tgt = -1) {
    if (dim < 0) throw Error(ErrorKind::BadIndices, "negative dimension");
    if (lookup_.count(name)) throw Error(ErrorKind::BadIndices, "duplicate cell id " + name);
    if (dim > n()) resize(dim);
    if (dim > 0 && (src < 0 || src >= count(dim - 1) || tgt < 0 || tgt >= count(dim - 1)))
      throw Error(ErrorKind::UnknownCell, "boundary of " + name + " is not a cell of dimension " + std::to_string(dim - 1));
    auto d = static_cast<std::size_t>(dim);
    names_[d].push_back(name);
    src_[d].push_back(dim > 0 ? src : -1);
    tgt_[d].push_back(dim > 0 ? tgt : -1);
    int idx = static_cast<int>(names_[d].size()) - 1;
    lookup_[name] = {dim, idx};
    return idx;
  }

  int add(int dim, const std::string& name, const std::string& src, const std::string& tgt) {
    return add(dim, name, index_of(dim - 1, src), index_of(dim - 1, tgt));
  }

  int source(int dim, int idx) const { return src_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]; }
  int target(int dim, int idx) const { return tgt_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]; }
  const std::string& name(int dim, int idx) const { return names_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]; }
  const std::vector<std::string>& names(int dim) const { return names_[static_cast<std::size_t>(dim)]; }

  std::optional<std::pair<int, int>> find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(int dim, const std::string& name) const {
    auto f = find(name);
    if (!f || f->first != dim)
      throw Error(ErrorKind::UnknownCell, "no cell " + name + " of dimension " + std::to_string(dim));
    return f->second;
  }

  void check_globular() const {
    for (int d = 2; d <= n(); ++d)
      for (int i = 0; i < count(d); ++i) {
        int s = source(d, i), t = target(d, i);
        if (source(d - 1, s) != source(d - 1, t) || target(d - 1, s) != target(d - 1, t))
          throw Error(ErrorKind::NotGlobular, "globular identities fail at " + name(d, i), d, i + 1);
      }
  }

  bool operator==(const GlobularSet& o) const {
    return names_ == o.names_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

 private:
  void resize(int n) {
    auto s = static_cast<std::size_t>(n + 1);
    if (names_.size() < s) {
      names_.resize(s);
      src_.resize(s);
      tgt_.resize(s);
    }
  }

  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> src_, tgt_;
  std::map<std::string, std::pair<int, int>> lookup_;
};

// A cell of a globular set. Comparison ignores the owning set.
struct Cell {
  const GlobularSet* set = nullptr;
  int dim = 0;
  int index = 0;

  const std::string& name() const { return set->name(dim, index); }
  bool operator==(const Cell& o) const { return dim == o.dim && index == o.index; }
  std::strong_ordering operator<=>(const Cell& o) const {
    if (auto c = dim <=> o.dim; c != 0) return c;
    return index <=> o.index;
  }
};

inline Cell cell(const GlobularSet& x, const std::string& name) {
  auto f = x.find(name);
  if (!f) throw Error(ErrorKind::UnknownCell, "no cell " + name);
  return {&x, f->first, f->second};
}

inline int cell_dim(const Cell& c) { return c.dim; }

inline Cell cell_source(const Cell& c) {
  if (c.dim == 0) throw Error(ErrorKind::DimZero, "0-cell has no source");
  return {c.set, c.dim - 1, c.set->source(c.dim, c.index)};
}

inline Cell cell_target(const Cell& c) {
  if (c.dim == 0) throw Error(ErrorKind::DimZero, "0-cell has no target");
  return {c.set, c.dim - 1, c.set->target(c.dim, c.index)};
}

inline std::string cell_name(const Cell& c) { return c.name(); }

// The terminal globular set: one cell in each dimension.
struct Star {
  int dim = 0;
  auto operator<=>(const Star&) const = default;
};

inline int cell_dim(const Star& s) { return s.dim; }
inline Star cell_source(const Star& s) { return {s.dim - 1}; }
inline Star cell_target(const Star& s) { return {s.dim - 1}; }
inline std::string cell_name(const Star& s) { return "*" + std::to_string(s.dim); }

// Diagrams themselves form a globular set with s = t = truncation.
inline int cell_dim(const SimpleDiagram& d) { return d.dim(); }
inline SimpleDiagram cell_source(const SimpleDiagram& d) { return source_target(d); }
inline SimpleDiagram cell_target(const SimpleDiagram& d) { return source_target(d); }

template <class C>
C iterated_source(C c, int times) {
  for (int r = 0; r < times; ++r) c = cell_source(c);
  return c;
}

template <class C>
C iterated_target(C c, int times) {
  for (int r = 0; r < times; ++r) c = cell_target(c);
  return c;
}

// ---- the globular set attached to a diagram ----

inline std::string hat_cell_name(int m, int i) { return "x" + std::to_string(m) + "_" + std::to_string(i); }
inline std::string hat_target_name(int m, int i) { return "t(" + hat_cell_name(m, i) + ")"; }

// Attach x^m_i level by level. Its source is x^{m-1}_{v(i)} when i is first in
// its fibre and t(x^m_p) otherwise; the attachment adds x^m_i and t(x^m_i).
inline GlobularSet hat(const SimpleDiagram& d) {
  GlobularSet g(d.dim());
  g.add(0, hat_cell_name(0, 1));
  for (int m = 1; m <= d.dim(); ++m) {
    for (int i = 1; i <= d.length(m); ++i) {
      int p = d.previous_in_fiber(m, i);
      std::string src = p == 0 ? hat_cell_name(m - 1, d.parent(m, i)) : hat_target_name(m, p);
      int s = g.index_of(m - 1, src);
      int t;
      if (m == 1) {
        t = g.add(0, hat_target_name(m, i));
      } else {
        t = g.add(m - 1, hat_target_name(m, i), g.source(m - 1, s), g.target(m - 1, s));
      }
      g.add(m, hat_cell_name(m, i), s, t);
    }
  }
  return g;
}

using GradedSubset = std::vector<std::vector<int>>;

inline GradedSubset min_generating(const GlobularSet& y) {
  GradedSubset out(static_cast<std::size_t>(y.n() + 1));
  for (int d = 0; d <= y.n(); ++d) {
    std::vector<bool> hit(static_cast<std::size_t>(y.count(d)), false);
    if (d + 1 <= y.n())
      for (int i = 0; i < y.count(d + 1); ++i) {
        hit[static_cast<std::size_t>(y.source(d + 1, i))] = true;
        hit[static_cast<std::size_t>(y.target(d + 1, i))] = true;
      }
    for (int i = 0; i < y.count(d); ++i)
      if (!hit[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(d)].push_back(i);
  }
  return out;
}

inline GlobularSet hom_globular(const GlobularSet& x, int from, int to) {
  GlobularSet out(std::max(0, x.n() - 1));
  std::vector<std::map<int, int>> remap(static_cast<std::size_t>(x.n() + 1));
  for (int k = 1; k <= x.n(); ++k) {
    for (int i = 0; i < x.count(k); ++i) {
      Cell z{&x, k, i};
      if (iterated_source(z, k).index != from || iterated_target(z, k).index != to) continue;
      int idx;
      if (k == 1) {
        idx = out.add(0, x.name(k, i));
      } else {
        idx = out.add(k - 1, x.name(k, i), remap[static_cast<std::size_t>(k - 1)].at(x.source(k, i)),
                      remap[static_cast<std::size_t>(k - 1)].at(x.target(k, i)));
      }
      remap[static_cast<std::size_t>(k)][i] = idx;
    }
  }
  return out;
}

}  // namespace sesqui
