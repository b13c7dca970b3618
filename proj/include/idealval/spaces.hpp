/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/encodings.hpp"
#include "idealval/oracle.hpp"
#include "idealval/relation.hpp"

#include <utility>
#include <vector>

namespace idealval {

/* A finite presentation with its ideals enumerated once; opens are sets of
 * ideals, represented as masks over the ideal list. */
struct finite_space {
  relation rel;
  std::vector<code_set> ideals;

  static finite_space of(const relation& rel);

  std::vector<bool> basic_open(code b) const;
  /* Saturating on enumerated unions: stops once the union of all basics is
   * reached, the enumerator exhausts, or a full window adds nothing. */
  std::vector<bool> eval_open(const open_expr& e) const;

  /* Distinct opens with their maximal generating code sets. */
  std::vector<std::pair<code_set, std::vector<bool>>> all_opens() const;
};

/* Exact oracle summing point masses over the ideals inside an open. Keys
 * must pass the ideal check; at most one entry per ideal. */
valuation_oracle make_finite_valuation(
    const relation& rel, const std::vector<std::pair<code_set, ext_rat>>& point_masses);

/* Point valuation of the ideal presented by x: 1 on opens containing the
 * point, 0 elsewhere. Exact when the relation is finite and the chain has
 * a constant tail; a stream oracle otherwise. */
valuation_oracle dirac(const relation& rel, const code_chain& x);

/* Two-point space: 0 below everything, 1 the open point. */
relation sierpinski();
/* Equal mixture of the two points; the standard exact example oracle. */
valuation_oracle sierpinski_mixture();

/* Rational open intervals ordered by strict containment with margin;
 * ideals are real points. Measure is interval length clipped to (0,1);
 * the unclipped variant sums raw lengths. */
std::pair<relation, valuation_oracle> lebesgue_line();
std::pair<relation, valuation_oracle> lebesgue_line_unclipped();

/* Finite bit strings ordered by proper prefix; ideals are infinite binary
 * sequences. Cylinder measure with weight p on bit 0 and 1-p on bit 1. */
std::pair<relation, valuation_oracle> cantor_coin(const rat& p);

} // namespace idealval
