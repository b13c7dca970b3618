/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/lower_real.hpp"
#include "idealval/open_expr.hpp"
#include "idealval/relation.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace idealval {

/* A valuation as an evaluator on open-set expressions. exact_eval, when
 * present, is total on the finite expression algebra; eval always works
 * and only ever reports lower bounds. Pure, safe for concurrent queries. */
struct valuation_oracle {
  std::function<lower_real(const open_expr&)> eval;
  std::function<ext_rat(const open_expr&)> exact_eval; // may be empty

  bool has_exact() const { return static_cast<bool>(exact_eval); }
};

/* strictness: the empty open evaluates to exactly 0 */
bool check_strictness(const valuation_oracle& nu);

/* modularity: nu(U) + nu(V) = nu(U u V) + nu(U n V), exactly */
bool check_modularity(const valuation_oracle& nu, const open_expr& u,
                      const open_expr& v);

/* The zone opens of a finite code set D at a non-empty G inside D:
 * first the intersection of the G-basics, then its part covered by the
 * remaining basics of D. */
std::pair<open_expr, open_expr> zone_opens(const code_set& D, const code_set& G);

/* For an upper set P of non-empty subsets of D, the zone differences must
 * sum to the measure of the union of the zone opens. Requires finite
 * values on P (throws otherwise); exact identity check. */
bool sum_of_differences_check(const valuation_oracle& nu, const code_set& D,
                              const std::vector<code_set>& P);

/* The subbasic predicate nu(U) > q. */
decision subbasic_gt(const valuation_oracle& nu, const open_expr& u,
                     const rat& q, std::size_t fuel);

} // namespace idealval
