#pragma once

#include <numeric>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/term.hpp"

namespace sesqui {

namespace detail {

inline std::vector<int> range_without(int len, int drop) {
  std::vector<int> out;
  for (int x = 1; x <= len; ++x)
    if (x != drop) out.push_back(x);
  return out;
}

template <class C>
Term<C> parse_valid(const Labelled<C>& l) {
  const auto& d = l.diagram;
  int k = d.dim();
  auto st = stats(d);
  if (st.M0 < k) {
    // empty top levels are a chain of units over the nondegenerate part
    auto t = parse_valid(iterated_source(l, k - st.M0));
    for (int u = st.M0 + 1; u <= k; ++u) t = Term<C>::unit(u, std::move(t));
    return t;
  }
  if (!st.M) return Term<C>::leaf(l.label(k, 1));
  int M = *st.M, len = d.length(M);
  if (M == k) return Term<C>::comp(k, k, parse_valid(restrict_labelled(l, k, {len}, Moment::End)),
                                   parse_valid(restrict_labelled(l, k, range_without(len, len))));
  auto low = iterated_source(l, k - M);
  if (d.parent(M + 1, 1) < len)
    return Term<C>::comp(M, k, parse_valid(restrict_labelled(low, M, {len}, Moment::End)),
                         parse_valid(restrict_labelled(l, M, range_without(len, len))));
  return Term<C>::comp(k, M, parse_valid(restrict_labelled(l, M, range_without(len, 1), Moment::End)),
                       parse_valid(restrict_labelled(low, M, {1})));
}

}  // namespace detail

// The canonical tree of a labelled diagram; eval_phi(parse(L)) == L.
template <class C>
Term<C> parse(const Labelled<C>& l) {
  try {
    check_labelling(l.diagram, l.labels);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidLabelling, e.what(), e.level(), e.position());
  }
  return detail::parse_valid(l);
}

template <class C>
Term<C> normalize(const Term<C>& t) {
  return parse(eval_phi(t));
}

template <class C>
bool equivalent(const Term<C>& a, const Term<C>& b) {
  return eval_phi(a) == eval_phi(b);
}

}  // namespace sesqui
