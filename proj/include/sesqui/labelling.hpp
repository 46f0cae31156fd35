#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/globular.hpp"

namespace sesqui {

// A diagram with a cell of C on every attached cell x^m_i of hat(D).
// C is any globular cell type: cell_dim, cell_source, cell_target and == are
// found by ADL. labels[m][i-1] labels x^m_i.
template <class C>
struct Labelled {
  SimpleDiagram diagram;
  std::vector<std::vector<C>> labels;

  int dim() const { return diagram.dim(); }
  const C& label(int m, int i) const { return labels[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Labelled&) const = default;
  auto operator<=>(const Labelled&) const = default;
};

using Labelling = Labelled<Cell>;

template <class C>
void check_labelling(const SimpleDiagram& d, const std::vector<std::vector<C>>& labels) {
  if (static_cast<int>(labels.size()) != d.dim() + 1)
    throw Error(ErrorKind::DimError, "labelling needs one row per level");
  for (int m = 0; m <= d.dim(); ++m) {
    const auto& row = labels[static_cast<std::size_t>(m)];
    if (static_cast<int>(row.size()) != d.length(m))
      throw Error(ErrorKind::DimError, "label row " + std::to_string(m) + " has the wrong length", m);
    for (int i = 1; i <= d.length(m); ++i)
      if (cell_dim(row[static_cast<std::size_t>(i - 1)]) != m)
        throw Error(ErrorKind::DimError, "label has the wrong dimension", m, i);
  }
  for (int m = 1; m <= d.dim(); ++m)
    for (int i = 1; i <= d.length(m); ++i) {
      const C& x = labels[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)];
      int p = d.previous_in_fiber(m, i);
      bool ok = p == 0
                    ? cell_source(x) == labels[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d.parent(m, i) - 1)]
                    : cell_source(x) == cell_target(labels[static_cast<std::size_t>(m)][static_cast<std::size_t>(p - 1)]);
      if (!ok)
        throw Error(ErrorKind::SourceMismatch,
                    "source of the label at level " + std::to_string(m) + " position " + std::to_string(i), m, i);
    }
}

template <class C>
Labelled<C> validate_labelling(const SimpleDiagram& d, std::vector<std::vector<C>> labels) {
  check_labelling(d, labels);
  return {d, std::move(labels)};
}

template <class C>
Labelled<C> labelling_source(const Labelled<C>& l) {
  if (l.dim() == 0) throw Error(ErrorKind::DimZero, "0-dimensional labelling has no source");
  auto labels = l.labels;
  labels.pop_back();
  return {source_target(l.diagram), std::move(labels)};
}

template <class C>
Labelled<C> labelling_target(const Labelled<C>& l) {
  if (l.dim() == 0) throw Error(ErrorKind::DimZero, "0-dimensional labelling has no target");
  int k = l.dim();
  auto labels = l.labels;
  labels.pop_back();
  for (int i = 1; i <= l.diagram.length(k - 1); ++i) {
    auto over = l.diagram.fiber_over(k - 1, i);
    if (!over.empty()) labels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = cell_target(l.label(k, over.back()));
  }
  return {source_target(l.diagram), std::move(labels)};
}

template <class C>
int cell_dim(const Labelled<C>& l) {
  return l.dim();
}
template <class C>
Labelled<C> cell_source(const Labelled<C>& l) {
  return labelling_source(l);
}
template <class C>
Labelled<C> cell_target(const Labelled<C>& l) {
  return labelling_target(l);
}

// Attached cells of hat(D) that are not sources or targets of higher cells,
// in level-then-position order.
inline std::vector<std::pair<int, int>> min_cells(const SimpleDiagram& d) {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= d.dim(); ++m)
    for (int i = 1; i <= d.length(m); ++i)
      if (!d.in_image(m, i)) out.emplace_back(m, i);
  return out;
}

// Downward propagation from labels on min cells; `given` maps (m,i) -> label.
template <class C>
Labelled<C> expand_min_labelling(const SimpleDiagram& d, const std::map<std::pair<int, int>, C>& given) {
  auto mins = min_cells(d);
  if (given.size() != mins.size())
    throw Error(ErrorKind::BadIndices, "minimal labelling must cover exactly the minimal cells");
  std::vector<std::vector<std::optional<C>>> rows(static_cast<std::size_t>(d.dim() + 1));
  for (int m = 0; m <= d.dim(); ++m) rows[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(d.length(m)));
  for (auto [m, i] : mins) {
    auto it = given.find({m, i});
    if (it == given.end()) throw Error(ErrorKind::BadIndices, "missing label on a minimal cell", m, i);
    rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)] = it->second;
  }
  for (int m = d.dim() - 1; m >= 0; --m)
    for (int i = 1; i <= d.length(m); ++i) {
      auto over = d.fiber_over(m, i);
      if (over.empty()) continue;
      const auto& above = rows[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(over.front() - 1)];
      if (cell_dim(*above) != m + 1) throw Error(ErrorKind::NotExtendable, "label of wrong dimension", m + 1, over.front());
      rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)] = cell_source(*above);
    }
  std::vector<std::vector<C>> labels(rows.size());
  for (std::size_t m = 0; m < rows.size(); ++m)
    for (auto& x : rows[m]) labels[m].push_back(*x);
  try {
    return validate_labelling(d, std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotExtendable, e.what(), e.level(), e.position());
  }
}

template <class C>
std::map<std::pair<int, int>, C> restrict_to_min(const Labelled<C>& l) {
  std::map<std::pair<int, int>, C> out;
  for (auto [m, i] : min_cells(l.diagram)) out.emplace(std::make_pair(m, i), l.label(m, i));
  return out;
}

template <class C>
Labelled<C> eta(const C& x) {
  int k = cell_dim(x);
  std::vector<std::vector<C>> labels(static_cast<std::size_t>(k + 1));
  C c = x;
  for (int m = k; m >= 0; --m) {
    labels[static_cast<std::size_t>(m)].push_back(c);
    if (m > 0) c = cell_source(c);
  }
  return {identity_diagram(k), std::move(labels)};
}

// Which moment of D a restriction L_S is read at. Level-m cells are composed
// in order, so a strand whose level-m cells were all dropped reads as it was
// before them (Start) or after them (End).
enum class Moment { Start, End };

// L_S. Kept cells keep their labels; lower labels are recomputed from the
// first kept cell over them, or from the dropped cells at the chosen moment.
template <class C>
Labelled<C> restrict_labelled(const Labelled<C>& l, int m, const std::vector<int>& subset, Moment at = Moment::Start) {
  SimpleDiagram d = restrict(l.diagram, m, subset);
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto labels = l.labels;
  std::vector<C> row;
  for (int x : s) row.push_back(l.label(m, x));
  labels[static_cast<std::size_t>(m)] = std::move(row);
  if (at == Moment::End)
    for (int i = 1; i <= d.length(m - 1); ++i) {
      auto over = l.diagram.fiber_over(m - 1, i);
      if (!over.empty() && d.fiber_over(m - 1, i).empty())
        labels[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i - 1)] = cell_target(l.label(m, over.back()));
    }
  for (int lv = m - 1; lv >= 0; --lv)
    for (int i = 1; i <= d.length(lv); ++i) {
      auto over = d.fiber_over(lv, i);
      if (!over.empty())
        labels[static_cast<std::size_t>(lv)][static_cast<std::size_t>(i - 1)] =
            cell_source(labels[static_cast<std::size_t>(lv + 1)][static_cast<std::size_t>(over.front() - 1)]);
    }
  return validate_labelling(d, std::move(labels));
}

template <class C, class F>
auto fmap(const Labelled<C>& l, F&& f) -> Labelled<std::decay_t<decltype(f(l.labels[0][0]))>> {
  using D = std::decay_t<decltype(f(l.labels[0][0]))>;
  std::vector<std::vector<D>> labels;
  for (const auto& row : l.labels) {
    std::vector<D> r;
    for (const auto& x : row) r.push_back(f(x));
    labels.push_back(std::move(r));
  }
  return {l.diagram, std::move(labels)};
}

// The diagram itself as a labelling in the terminal globular set.
inline Labelled<Star> as_star(const SimpleDiagram& d) {
  std::vector<std::vector<Star>> labels;
  for (int m = 0; m <= d.dim(); ++m) labels.emplace_back(static_cast<std::size_t>(d.length(m)), Star{m});
  return {d, std::move(labels)};
}

// The tautological labelling of D by hat(D).
inline Labelling hat_labelling(const SimpleDiagram& d, const GlobularSet& h) {
  std::vector<std::vector<Cell>> labels;
  for (int m = 0; m <= d.dim(); ++m) {
    std::vector<Cell> row;
    for (int i = 1; i <= d.length(m); ++i) row.push_back(cell(h, hat_cell_name(m, i)));
    labels.push_back(std::move(row));
  }
  return validate_labelling(d, std::move(labels));
}

// Every valid labelling of D in X, level by level.
inline void for_each_labelling(const SimpleDiagram& d, const GlobularSet& x,
                               const std::function<void(const Labelling&)>& f) {
  std::vector<std::vector<Cell>> labels(static_cast<std::size_t>(d.dim() + 1));
  std::function<void(int, int)> place = [&](int m, int i) {
    if (m > d.dim()) {
      f(Labelling{d, labels});
      return;
    }
    if (i > d.length(m)) {
      place(m + 1, 1);
      return;
    }
    auto& row = labels[static_cast<std::size_t>(m)];
    std::optional<Cell> want;
    if (m > 0) {
      int p = d.previous_in_fiber(m, i);
      want = p == 0 ? labels[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d.parent(m, i) - 1)]
                    : cell_target(row[static_cast<std::size_t>(p - 1)]);
    }
    for (int c = 0; c < x.count(m); ++c) {
      Cell cand{&x, m, c};
      if (want && !(cell_source(cand) == *want)) continue;
      row.push_back(cand);
      place(m, i + 1);
      row.pop_back();
    }
  };
  place(0, 1);
}

}  // namespace sesqui
