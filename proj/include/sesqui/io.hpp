#pragma once

// JSON forms of diagrams, globular sets, labellings, nests, algebras and lifts.
// Cells are always referred to by name.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sesqui/algebra.hpp"
#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/globular.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/monad.hpp"
#include "sesqui/notation.hpp"

namespace sesqui::io {

using json = nlohmann::json;

namespace detail {

inline Error bad(const std::string& what) { return Error(ErrorKind::SyntaxError, what); }

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw bad(std::string("malformed JSON: ") + e.what());
  }
}

inline std::pair<int, int> index_pair(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw bad("expected a key of the form \"i,j\", got \"" + key + "\"");
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw bad("expected a key of the form \"i,j\", got \"" + key + "\"");
  }
}

inline int index_one(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw bad("expected an integer key, got \"" + key + "\"");
}

}  // namespace detail

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw detail::bad(std::string("invalid JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

// ---- diagrams ----

inline json to_json(const SimpleDiagram& d) {
  return {{"notation", print_notation(d)}, {"dim", d.dim()}, {"parents", d.all_parents()}};
}

inline SimpleDiagram diagram_from_json(const json& j) {
  return detail::guarded([&] {
    if (j.is_string()) return parse_notation(j.get<std::string>());
    if (j.contains("notation")) return parse_notation(j.at("notation").get<std::string>());
    if (j.contains("parents")) return SimpleDiagram(j.at("parents").get<std::vector<std::vector<int>>>());
    throw detail::bad("a diagram is a notation string or an object with \"notation\" or \"parents\"");
  });
}

// ---- globular sets ----

inline json to_json(const GlobularSet& x) {
  json cells = json::array();
  for (int d = 0; d <= x.n(); ++d)
    for (int i = 0; i < x.count(d); ++i) {
      json c{{"id", x.name(d, i)}, {"dim", d}};
      if (d > 0) {
        c["src"] = x.name(d - 1, x.source(d, i));
        c["tgt"] = x.name(d - 1, x.target(d, i));
      }
      cells.push_back(std::move(c));
    }
  return {{"n", x.n()}, {"cells", std::move(cells)}};
}

inline GlobularSet globular_from_json(const json& j) {
  return detail::guarded([&] {
    GlobularSet x(j.value("n", 0));
    std::vector<json> cells = j.at("cells").get<std::vector<json>>();
    std::stable_sort(cells.begin(), cells.end(), [](const json& a, const json& b) { return a.at("dim").get<int>() < b.at("dim").get<int>(); });
    for (const auto& c : cells) {
      int d = c.at("dim").get<int>();
      auto id = c.at("id").get<std::string>();
      if (d == 0)
        x.add(0, id);
      else
        x.add(d, id, c.at("src").get<std::string>(), c.at("tgt").get<std::string>());
    }
    x.check_globular();
    return x;
  });
}

// ---- labellings ----

inline json to_json(const Labelling& l) {
  json rows = json::array();
  for (const auto& row : l.labels) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.name());
    rows.push_back(std::move(r));
  }
  return {{"diagram", print_notation(l.diagram)}, {"labels", std::move(rows)}};
}

// Either every label ("labels", one row per level) or only the minimal cells
// ("min": {"m,i": name}).
inline Labelling labelling_from_json(const json& j, const GlobularSet& x) {
  return detail::guarded([&] {
    SimpleDiagram d = diagram_from_json(j.at("diagram"));
    if (j.contains("min")) {
      std::map<std::pair<int, int>, Cell> given;
      for (auto& [k, v] : j.at("min").items()) given.emplace(detail::index_pair(k), cell(x, v.get<std::string>()));
      return expand_min_labelling(d, given);
    }
    std::vector<std::vector<Cell>> labels;
    for (const auto& row : j.at("labels")) {
      std::vector<Cell> r;
      for (const auto& name : row) r.push_back(cell(x, name.get<std::string>()));
      labels.push_back(std::move(r));
    }
    return validate_labelling(d, std::move(labels));
  });
}

// ---- nests ----

inline json to_json(const DiagramOfDiagrams& dd) {
  json rows = json::array();
  for (const auto& row : dd.labels) {
    json r = json::array();
    for (const auto& d : row) r.push_back(print_notation(d));
    rows.push_back(std::move(r));
  }
  return {{"outer", print_notation(dd.diagram)}, {"inner", std::move(rows)}};
}

// Inner diagrams may be null or omitted below the top; they are derived.
inline DiagramOfDiagrams nest_from_json(const json& j) {
  return detail::guarded([&] {
    SimpleDiagram outer = diagram_from_json(j.at("outer"));
    std::vector<std::vector<std::optional<SimpleDiagram>>> inner;
    for (const auto& row : j.at("inner")) {
      std::vector<std::optional<SimpleDiagram>> r;
      for (const auto& d : row) r.push_back(d.is_null() ? std::nullopt : std::optional<SimpleDiagram>(diagram_from_json(d)));
      inner.push_back(std::move(r));
    }
    inner.resize(static_cast<std::size_t>(outer.dim() + 1));
    return complete_nest(outer, inner);
  });
}

// ---- algebras ----

inline json to_json(const SesquiAlgebra& a) {
  json comp = json::object(), unit = json::object();
  for (auto& [ij, tab] : a.comp) {
    auto [i, j] = ij;
    json rows = json::array();
    for (auto& [xy, r] : tab) rows.push_back({a.name(i, xy.first), a.name(j, xy.second), a.name(std::max(i, j), r)});
    comp[std::to_string(i) + "," + std::to_string(j)] = std::move(rows);
  }
  for (auto& [i, tab] : a.unit) {
    json rows = json::array();
    for (auto& [x, r] : tab) rows.push_back({a.name(i - 1, x), a.name(i, r)});
    unit[std::to_string(i)] = std::move(rows);
  }
  return {{"globular", to_json(a.cells)}, {"comp", std::move(comp)}, {"unit", std::move(unit)}};
}

inline SesquiAlgebra algebra_from_json(const json& j) {
  return detail::guarded([&] {
    SesquiAlgebra a;
    a.cells = globular_from_json(j.at("globular"));
    if (j.contains("comp"))
      for (auto& [k, rows] : j.at("comp").items()) {
        auto [i, jj] = detail::index_pair(k);
        if (i < 1 || jj < 1 || i > a.n() || jj > a.n()) throw Error(ErrorKind::PartialTable, "no operation o_{" + k + "} in dimension " + std::to_string(a.n()));
        for (const auto& r : rows)
          a.set_comp(i, jj, a.cell_index(i, r.at(0).get<std::string>()), a.cell_index(jj, r.at(1).get<std::string>()),
                     a.cell_index(std::max(i, jj), r.at(2).get<std::string>()));
      }
    if (j.contains("unit"))
      for (auto& [k, rows] : j.at("unit").items()) {
        int i = detail::index_one(k);
        if (i < 1 || i > a.n()) throw Error(ErrorKind::PartialTable, "no operation u_" + k + " in dimension " + std::to_string(a.n()));
        for (const auto& r : rows) a.set_unit(i, a.cell_index(i - 1, r.at(0).get<std::string>()), a.cell_index(i, r.at(1).get<std::string>()));
      }
    return a;
  });
}

// ---- lifts ----

inline json to_json(const HomLift& h) {
  const auto& b = h.base;
  json homs = json::array(), action = json::array();
  for (auto& [pq, hom] : h.homs) homs.push_back({{"from", b.name(0, pq.first)}, {"to", b.name(0, pq.second)}, {"algebra", to_json(hom)}});
  for (auto& [fg, tab] : h.action) {
    auto [f, g] = fg;
    const auto& from = h.homs.at({b.cells.target(1, f), b.cells.source(1, g)});
    const auto& to = h.homs.at({b.cells.source(1, f), b.cells.target(1, g)});
    json maps = json::array();
    for (std::size_t k = 0; k < tab.size() && static_cast<int>(k) < h.n(); ++k) {
      json m = json::array();
      int kk = static_cast<int>(k);
      for (std::size_t z = 0; z < tab[k].size(); ++z) m.push_back({from.name(kk, static_cast<int>(z)), to.name(kk, tab[k][z])});
      maps.push_back(std::move(m));
    }
    action.push_back({{"f", b.name(1, f)}, {"g", b.name(1, g)}, {"maps", std::move(maps)}});
  }
  return {{"base", to_json(b)}, {"homs", std::move(homs)}, {"action", std::move(action)}};
}

inline HomLift lift_from_json(const json& j) {
  return detail::guarded([&] {
    HomLift h;
    h.base = algebra_from_json(j.at("base"));
    const auto& b = h.base;
    for (const auto& e : j.at("homs"))
      h.homs[{b.cell_index(0, e.at("from").get<std::string>()), b.cell_index(0, e.at("to").get<std::string>())}] = algebra_from_json(e.at("algebra"));
    for (const auto& e : j.at("action")) {
      int f = b.cell_index(1, e.at("f").get<std::string>()), g = b.cell_index(1, e.at("g").get<std::string>());
      auto from = h.homs.find({b.cells.target(1, f), b.cells.source(1, g)});
      auto to = h.homs.find({b.cells.source(1, f), b.cells.target(1, g)});
      if (from == h.homs.end() || to == h.homs.end()) throw Error(ErrorKind::LiftInconsistent, "action between missing hom algebras");
      std::vector<std::vector<int>> tab;
      int k = 0;
      for (const auto& m : e.at("maps")) {
        std::vector<int> row(static_cast<std::size_t>(from->second.cells.count(k)), -1);
        for (const auto& pr : m) {
          int z = from->second.cell_index(k, pr.at(0).get<std::string>());
          row[static_cast<std::size_t>(z)] = to->second.cell_index(k, pr.at(1).get<std::string>());
        }
        tab.push_back(std::move(row));
        ++k;
      }
      h.action[{f, g}] = std::move(tab);
    }
    return h;
  });
}

// ---- reports ----

inline json to_json(const RelationReport& r) {
  json fams = json::array();
  for (const auto& f : r.families) {
    json e{{"family", f.name}, {"instances", f.instances}, {"passed", f.passed()}};
    if (f.witness) e["witness"] = *f.witness;
    fams.push_back(std::move(e));
  }
  return {{"passed", r.passed()}, {"families", std::move(fams)}};
}

inline json to_json(const ProbeResult& p) {
  json e{{"holds", p.holds()}, {"instances", p.instances}};
  if (p.witness) e["witness"] = *p.witness;
  return e;
}

}  // namespace sesqui::io
