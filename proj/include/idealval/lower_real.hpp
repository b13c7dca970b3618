/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/rational.hpp"
#include "idealval/relation.hpp"

#include <functional>
#include <optional>

namespace idealval {

/* A real known only from below: a monotone stream of rational lower
 * bounds, with an optional exact short-circuit. Streams are single-consumer. */
struct lower_real {
  std::function<rat(std::size_t)> approx;
  std::optional<ext_rat> exact;

  rat at(std::size_t fuel) const { return approx(fuel); }

  static lower_real constant(rat v)
  {
    lower_real x;
    x.exact = ext_rat(v);
    x.approx = [v = std::move(v)](std::size_t) { return v; };
    return x;
  }

  /* Infinity is witnessed by unboundedly growing bounds. */
  static lower_real of(const ext_rat& v)
  {
    if (!v.is_inf())
      return constant(v.value);
    lower_real x;
    x.exact = ext_rat::inf();
    x.approx = [](std::size_t n) { return rat((unsigned long)n); };
    return x;
  }
};

/* The subbasic predicate "value > q": decided by the exact short-circuit
 * when present, otherwise semidecided by the stream. */
decision exceeds(const lower_real& x, const rat& q, std::size_t fuel);

} // namespace idealval
