#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/labelling.hpp"

namespace sesqui {

// Outer diagram whose dots carry compatible diagrams: s(D^m_i) = D^{m-1}_{v^m(i)}.
using DiagramOfDiagrams = Labelled<SimpleDiagram>;

namespace detail {

// Level m of the composite is the ordered disjoint union of the level-m cells
// of the inner diagrams sitting on the level-m dots of the outer diagram.
template <class Inner>
SimpleDiagram compose_diagram(const SimpleDiagram& outer, Inner inner) {
  int k = outer.dim();
  std::vector<std::vector<int>> offset(static_cast<std::size_t>(k + 1));
  offset[0] = {0};
  std::vector<std::vector<int>> parents;
  for (int m = 1; m <= k; ++m) {
    std::vector<int> level;
    auto& off = offset[static_cast<std::size_t>(m)];
    for (int i = 1; i <= outer.length(m); ++i) {
      off.push_back(static_cast<int>(level.size()));
      const SimpleDiagram& d = inner(m, i);
      int base = offset[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(outer.parent(m, i) - 1)];
      for (int a = 1; a <= d.length(m); ++a) level.push_back(base + d.parent(m, a));
    }
    parents.push_back(std::move(level));
  }
  return SimpleDiagram(std::move(parents));
}

template <class C>
void check_nest(const SimpleDiagram& outer, const std::vector<std::vector<C>>& labels) {
  try {
    check_labelling(outer, labels);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SourceMismatch)
      throw Error(ErrorKind::IncompatibleLabels, "inner diagrams do not match along their boundaries", e.level(),
                  e.position());
    throw;
  }
}

}  // namespace detail

inline SimpleDiagram mu(const DiagramOfDiagrams& dd) {
  detail::check_nest(dd.diagram, dd.labels);
  return detail::compose_diagram(dd.diagram, [&](int m, int i) -> const SimpleDiagram& { return dd.label(m, i); });
}

template <class C>
Labelled<C> mu(const Labelled<Labelled<C>>& nest) {
  detail::check_nest(nest.diagram, nest.labels);
  const auto& outer = nest.diagram;
  SimpleDiagram d =
      detail::compose_diagram(outer, [&](int m, int i) -> const SimpleDiagram& { return nest.label(m, i).diagram; });
  std::vector<std::vector<C>> labels(static_cast<std::size_t>(outer.dim() + 1));
  for (int m = 0; m <= outer.dim(); ++m)
    for (int i = 1; i <= outer.length(m); ++i) {
      const auto& row = nest.label(m, i).labels[static_cast<std::size_t>(m)];
      labels[static_cast<std::size_t>(m)].insert(labels[static_cast<std::size_t>(m)].end(), row.begin(), row.end());
    }
  return {std::move(d), std::move(labels)};
}

// Fill in inner diagrams below the top by taking sources; supplied ones are
// checked against the derived value.
inline DiagramOfDiagrams complete_nest(const SimpleDiagram& outer,
                                       const std::vector<std::vector<std::optional<SimpleDiagram>>>& inner) {
  if (static_cast<int>(inner.size()) != outer.dim() + 1) throw Error(ErrorKind::DimError, "need one row per level");
  std::map<std::pair<int, int>, SimpleDiagram> given;
  for (auto [m, i] : min_cells(outer)) {
    const auto& row = inner[static_cast<std::size_t>(m)];
    if (static_cast<int>(row.size()) < i || !row[static_cast<std::size_t>(i - 1)])
      throw Error(ErrorKind::IncompatibleLabels, "an inner diagram on a minimal dot is required", m, i);
    given.emplace(std::make_pair(m, i), *row[static_cast<std::size_t>(i - 1)]);
  }
  DiagramOfDiagrams dd;
  try {
    dd = expand_min_labelling(outer, given);
  } catch (const Error& e) {
    throw Error(ErrorKind::IncompatibleLabels, e.what(), e.level(), e.position());
  }
  for (int m = 0; m <= outer.dim(); ++m) {
    const auto& row = inner[static_cast<std::size_t>(m)];
    if (static_cast<int>(row.size()) > outer.length(m)) throw Error(ErrorKind::DimError, "too many inner diagrams", m);
    for (int i = 1; i <= static_cast<int>(row.size()); ++i)
      if (row[static_cast<std::size_t>(i - 1)] && *row[static_cast<std::size_t>(i - 1)] != dd.label(m, i))
        throw Error(ErrorKind::IncompatibleLabels, "supplied inner diagram disagrees with the derived one", m, i);
  }
  return dd;
}

// pi on a labelled diagram: labels travel with their cells.
template <class C>
Labelled<C> pi_labelled(const Labelled<C>& l) {
  auto sigma = pi_permutation(l.diagram);
  auto labels = l.labels;
  for (int m = 1; m <= l.dim(); ++m)
    for (int i = 1; i <= l.diagram.length(m); ++i)
      labels[static_cast<std::size_t>(m)][static_cast<std::size_t>(sigma[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)] - 1)] =
          l.label(m, i);
  return {permute(l.diagram, sigma), std::move(labels)};
}

// pi on the outer diagram and on every inner diagram.
inline DiagramOfDiagrams pi_nest(const DiagramOfDiagrams& dd) {
  auto p = pi_labelled(dd);
  for (auto& row : p.labels)
    for (auto& d : row) d = pi(d);
  return p;
}

// Substitute block-decomposition parts back into the block.
inline SimpleDiagram recompose(const BlockDecomposition& b) {
  const auto& B = b.block;
  auto st = stats(B);
  int k = B.dim(), M = *st.m;
  std::map<std::pair<int, int>, SimpleDiagram> given;
  if (M == k) {
    for (int j = 1; j <= B.length(k); ++j) given.emplace(std::make_pair(k, j), b.parts[static_cast<std::size_t>(j - 1)]);
  } else {
    int p = B.parent(M + 1, 1);
    for (int j = 1; j <= B.length(M); ++j)
      given.emplace(j == p ? std::make_pair(k, 1) : std::make_pair(M, j), b.parts[static_cast<std::size_t>(j - 1)]);
  }
  return mu(expand_min_labelling(B, given));
}

}  // namespace sesqui
