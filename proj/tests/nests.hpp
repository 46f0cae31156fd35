#pragma once

// Exhaustive generators for labelled diagrams and nests of them.
// A provider hands out cells: its 0-cells, and the (d+1)-cells with a given
// d-cell as source. Providers stack, so T X, T T X, T T T X all enumerate the
// same way.

#include <functional>
#include <vector>

#include "sesqui/globular.hpp"
#include "sesqui/labelling.hpp"

namespace sesqui::nests {

struct CellsOf {
  using cell_type = Cell;
  const GlobularSet* X;

  void zero(const std::function<void(const Cell&)>& f) const {
    for (int i = 0; i < X->count(0); ++i) f(Cell{X, 0, i});
  }
  void over(const Cell& src, const std::function<void(const Cell&)>& f) const {
    for (int i = 0; i < X->count(src.dim + 1); ++i) {
      Cell c{X, src.dim + 1, i};
      if (cell_source(c) == src) f(c);
    }
  }
};

// Diagrams of dimension ≤ max_dim with at most `budget` cells, as cells of the
// terminal-like globular set of diagrams.
struct DiagramsOf {
  using cell_type = SimpleDiagram;
  int budget;

  void zero(const std::function<void(const SimpleDiagram&)>& f) const { f(SimpleDiagram()); }
  void over(const SimpleDiagram& src, const std::function<void(const SimpleDiagram&)>& f) const {
    int room = budget - src.total_cells();
    int below = src.length(src.dim());
    if (below == 0) room = 0;
    for (int l = 0; l <= room; ++l) {
      std::vector<int> v(static_cast<std::size_t>(l), 1);
      while (true) {
        auto p = src.all_parents();
        p.push_back(v);
        f(SimpleDiagram(std::move(p)));
        int q = l - 1;
        while (q >= 0 && v[static_cast<std::size_t>(q)] == below) v[static_cast<std::size_t>(q--)] = 1;
        if (q < 0) break;
        ++v[static_cast<std::size_t>(q)];
      }
    }
  }
};

// Labelled diagrams in the cells of P with at most `budget` dots.
template <class P>
struct LabelledOf {
  using inner_cell = typename P::cell_type;
  using cell_type = Labelled<inner_cell>;
  P inner;
  int budget;

  void zero(const std::function<void(const cell_type&)>& f) const {
    inner.zero([&](const inner_cell& z) { f(cell_type{SimpleDiagram(), {{z}}}); });
  }

  // All labelled (d+1)-diagrams whose source is src.
  void over(const cell_type& src, const std::function<void(const cell_type&)>& f) const {
    const auto& s = src.diagram;
    int m = s.dim() + 1;
    int below = s.length(s.dim());
    int room = below == 0 ? 0 : budget - s.total_cells();
    for (int l = 0; l <= room; ++l) {
      std::vector<int> v(static_cast<std::size_t>(l), 1);
      while (true) {
        auto p = s.all_parents();
        p.push_back(v);
        SimpleDiagram d(std::move(p));
        auto labels = src.labels;
        labels.emplace_back();
        std::function<void(int)> place = [&](int i) {
          if (i > l) {
            f(cell_type{d, labels});
            return;
          }
          auto& row = labels[static_cast<std::size_t>(m)];
          int prev = d.previous_in_fiber(m, i);
          inner_cell want = prev == 0 ? labels[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d.parent(m, i) - 1)]
                                      : cell_target(row[static_cast<std::size_t>(prev - 1)]);
          inner.over(want, [&](const inner_cell& c) {
            row.push_back(c);
            place(i + 1);
            row.pop_back();
          });
        };
        place(1);
        int q = l - 1;
        while (q >= 0 && v[static_cast<std::size_t>(q)] == below) v[static_cast<std::size_t>(q--)] = 1;
        if (q < 0) break;
        ++v[static_cast<std::size_t>(q)];
      }
    }
  }
};

// Every cell of the provider up to dimension max_dim.
template <class P>
void for_each_cell(const P& p, int max_dim, const std::function<void(const typename P::cell_type&)>& f) {
  std::function<void(const typename P::cell_type&, int)> go = [&](const typename P::cell_type& c, int d) {
    f(c);
    if (d < max_dim) p.over(c, [&](const typename P::cell_type& up) { go(up, d + 1); });
  };
  p.zero([&](const typename P::cell_type& z) { go(z, 0); });
}

}  // namespace sesqui::nests
