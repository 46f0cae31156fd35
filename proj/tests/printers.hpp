#pragma once

#include <ostream>

#include "sesqui/labelling.hpp"
#include "sesqui/notation.hpp"
#include "sesqui/term_notation.hpp"

namespace sesqui {

inline void PrintTo(const SimpleDiagram& d, std::ostream* os) { *os << print_notation(d); }

inline void PrintTo(const Term<Cell>& t, std::ostream* os) { *os << print_term(t); }

inline void PrintTo(const Labelling& l, std::ostream* os) {
  *os << print_notation(l.diagram) << " [";
  for (std::size_t m = 0; m < l.labels.size(); ++m) {
    *os << (m ? " | " : "");
    for (std::size_t i = 0; i < l.labels[m].size(); ++i) *os << (i ? "," : "") << l.labels[m][i].name();
  }
  *os << "]";
}

}  // namespace sesqui
