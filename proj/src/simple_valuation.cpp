/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/simple_valuation.hpp"

namespace idealval {

rat mass_over(const simple_valuation& r, const code_set& F)
{
  rat s = 0;
  for (code c : F)
    if (const rat* w = r.weight(c))
      s += *w;
  return s;
}

simple_valuation restrict_to(const simple_valuation& r, const code_set& A)
{
  simple_valuation out;
  for (const auto& [c, w] : r.weights)
    if (A.contains(c))
      out.weights.emplace(c, w);
  return out;
}

bool prec_v(const relation& rel, const simple_valuation& r,
            const simple_valuation& s, std::size_t guard)
{
  const std::size_t k = r.weights.size();
  if (k == 0)
    return true;
  if (k > guard)
    throw std::length_error("prec_v: domain larger than guard");

  std::vector<code> rb;
  std::vector<rat> rw;
  for (const auto& [c, w] : r.weights) {
    rb.push_back(c);
    rw.push_back(w);
  }

  // Group dom(s) by predecessor signature over dom(r), then use a
  // sum-over-subsets table so each F costs O(1) comparisons.
  std::vector<rat> sig_mass((std::size_t)1 << k, rat(0));
  rat s_total = 0;
  for (const auto& [c, w] : s.weights) {
    std::size_t sig = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (rel.prec(rb[j], c))
        sig |= (std::size_t)1 << j;
    sig_mass[sig] += w;
    s_total += w;
  }
  // below[m] = total s-mass whose signature is a subset of m
  std::vector<rat>& below = sig_mass;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = 0; m < ((std::size_t)1 << k); ++m)
      if (m & ((std::size_t)1 << j))
        below[m] += below[m ^ ((std::size_t)1 << j)];

  const std::size_t full = ((std::size_t)1 << k) - 1;
  std::vector<rat> rsum((std::size_t)1 << k, rat(0));
  for (std::size_t m = 1; m <= full; ++m) {
    const std::size_t low = m & (~m + 1);
    std::size_t j = 0;
    while (!(low & ((std::size_t)1 << j)))
      ++j;
    rsum[m] = rsum[m ^ low] + rw[j];
    // mass of s on the upward closure of F = total - mass with signature
    // disjoint from F
    const rat up_mass = s_total - below[full ^ m];
    if (!(rsum[m] < up_mass))
      return false;
  }
  return true;
}

std::optional<simple_valuation> refine_in_ideal(const relation& rel,
                                                const valuation_chain& ch,
                                                const simple_valuation& r,
                                                std::size_t fuel,
                                                std::size_t guard)
{
  for (std::size_t i = 0; i < fuel; ++i) {
    const simple_valuation& t = ch.at(i);
    if (prec_v(rel, r, t, guard)) {
      const code_set keep = up_set(rel, r.domain(), t.domain());
      return restrict_to(t, keep);
    }
    if (ch.constant_from() && i >= *ch.constant_from())
      break;
  }
  return std::nullopt;
}

} // namespace idealval
