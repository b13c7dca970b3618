/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/rational.hpp"
#include "idealval/relation.hpp"

#include <map>
#include <optional>

namespace idealval {

/* A finite formal sum of basic opens with strictly positive rational
 * weights. The empty sum is the bottom element of prec_v. */
struct simple_valuation {
  std::map<code, rat> weights;

  simple_valuation() = default;
  explicit simple_valuation(std::map<code, rat> w) : weights(std::move(w))
  {
    for (const auto& [c, q] : weights)
      if (q <= 0)
        throw std::invalid_argument("simple_valuation: non-positive weight");
  }

  bool empty() const { return weights.empty(); }

  code_set domain() const
  {
    code_set d;
    for (const auto& [c, q] : weights)
      d.elems.push_back(c); // map iterates in order, already sorted
    return d;
  }

  rat total_mass() const
  {
    rat s = 0;
    for (const auto& [c, q] : weights)
      s += q;
    return s;
  }

  const rat* weight(code c) const
  {
    auto it = weights.find(c);
    return it == weights.end() ? nullptr : &it->second;
  }

  friend bool operator==(const simple_valuation&, const simple_valuation&) = default;
};

using valuation_chain = chain<simple_valuation>;

/* Exact sum of r over F (codes outside dom(r) contribute nothing). */
rat mass_over(const simple_valuation& r, const code_set& F);

/* Weights of r restricted to A. */
simple_valuation restrict_to(const simple_valuation& r, const code_set& A);

/* The order on formal sums: r prec_v s iff for every non-empty F inside
 * dom(r) the F-sum of r is strictly below the mass s places on the strict
 * upward closure of F. Exponential in |dom(r)|, hence the guard. */
bool prec_v(const relation& rel, const simple_valuation& r,
            const simple_valuation& s, std::size_t guard = 20);

/* Finds a chain element t above r (within fuel), then restricts it to the
 * upward closure of dom(r). The result s satisfies r prec_v s and
 * dom(r) prec_u dom(s) and lies in the chain's ideal. */
std::optional<simple_valuation> refine_in_ideal(const relation& rel,
                                                const valuation_chain& ch,
                                                const simple_valuation& r,
                                                std::size_t fuel,
                                                std::size_t guard = 20);

} // namespace idealval
