/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/relation.hpp"

#include <cassert>
#include <unordered_map>

namespace idealval {

namespace {

struct finite_table {
  std::vector<code> codes;
  std::unordered_map<code, std::size_t> index;
  std::vector<std::vector<bool>> mat;

  bool prec(code a, code b) const
  {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      return false;
    return mat[ia->second][ib->second];
  }
};

std::shared_ptr<finite_table> build_table(const std::vector<std::pair<code, code>>& edges,
                                          const std::vector<code>& extra_codes)
{
  auto t = std::make_shared<finite_table>();
  for (const auto& [a, b] : edges) {
    t->codes.push_back(a);
    t->codes.push_back(b);
  }
  t->codes.insert(t->codes.end(), extra_codes.begin(), extra_codes.end());
  std::sort(t->codes.begin(), t->codes.end());
  t->codes.erase(std::unique(t->codes.begin(), t->codes.end()), t->codes.end());
  for (std::size_t i = 0; i < t->codes.size(); ++i)
    t->index[t->codes[i]] = i;
  const std::size_t n = t->codes.size();
  t->mat.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : edges)
    t->mat[t->index[a]][t->index[b]] = true;
  return t;
}

relation from_table(std::shared_ptr<finite_table> t)
{
  relation rel;
  rel.universe = t->codes;
  rel.finite = true;
  rel.prec_fn = [t = std::move(t)](code a, code b) { return t->prec(a, b); };
  return rel;
}

} // namespace

relation transitive_closure(const std::vector<std::pair<code, code>>& edges,
                            const std::vector<code>& extra_codes)
{
  auto t = build_table(edges, extra_codes);
  const std::size_t n = t->codes.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (t->mat[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (t->mat[k][j])
            t->mat[i][j] = true;
  return from_table(std::move(t));
}

relation finite_relation(const std::vector<std::pair<code, code>>& edges,
                         const std::vector<code>& extra_codes)
{
  auto t = build_table(edges, extra_codes);
  const std::size_t n = t->codes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t->mat[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (t->mat[j][k] && !t->mat[i][k])
            throw std::invalid_argument("relation is not transitive (use closure)");
  return from_table(std::move(t));
}

bool is_transitive(const relation& rel)
{
  for (code a : rel.universe)
    for (code b : rel.universe)
      if (rel.prec(a, b))
        for (code c : rel.universe)
          if (rel.prec(b, c) && !rel.prec(a, c))
            return false;
  return true;
}

code_set up_set(const relation& rel, const code_set& F, const code_set& S)
{
  code_set out;
  for (code c : S)
    for (code b : F)
      if (rel.prec(b, c)) {
        out.insert(c);
        break;
      }
  return out;
}

bool prec_u(const relation& rel, const code_set& F, const code_set& G)
{
  for (code n : G) {
    bool witnessed = false;
    for (code m : F)
      if (rel.prec(m, n)) {
        witnessed = true;
        break;
      }
    if (!witnessed)
      return false;
  }
  return true;
}

decision ideal_member(const relation& rel, const code_chain& ch, code b,
                      std::size_t fuel)
{
  code_set down;
  std::size_t stable = 0;
  const std::size_t window = rel.finite ? rel.universe.size() + 1 : 0;
  for (std::size_t i = 0; i < fuel; ++i) {
    const code a = ch.at(i);
    if (a == b || rel.prec(b, a))
      return decision::confirmed;
    if (ch.constant_from() && i >= *ch.constant_from())
      return decision::refuted;
    if (rel.finite) {
      const std::size_t before = down.size();
      down.insert(a);
      for (code c : rel.universe)
        if (rel.prec(c, a))
          down.insert(c);
      stable = down.size() == before ? stable + 1 : 0;
      if (stable >= window)
        return decision::refuted;
    }
  }
  return decision::unknown;
}

bool is_ideal_finite(const relation& rel, const code_set& I)
{
  if (I.empty())
    return false;
  for (code a : I)
    for (code b : rel.universe)
      if (rel.prec(b, a) && !I.contains(b))
        return false;
  for (code a : I)
    for (code b : I) {
      bool bounded = false;
      for (code c : I)
        if (rel.prec(a, c) && rel.prec(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded)
        return false;
    }
  return true;
}

std::vector<code_set> enumerate_ideals_finite(const relation& rel)
{
  const std::size_t n = rel.universe.size();
  if (n > 16)
    throw std::length_error("enumerate_ideals_finite: more than 16 codes");
  std::vector<code_set> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    code_set I;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        I.insert(rel.universe[i]);
    if (is_ideal_finite(rel, I))
      out.push_back(std::move(I));
  }
  return out;
}

decision gu_member(const relation& rel, const code_set_chain& J,
                   const code_chain& I, std::size_t fuel)
{
  bool tail_known = false;
  bool any_unknown = false;
  for (std::size_t j = 0; j < fuel; ++j) {
    const code_set& F = J.at(j);
    bool met = false;
    bool all_refuted = true;
    for (code m : F) {
      switch (ideal_member(rel, I, m, fuel)) {
      case decision::confirmed:
        met = true;
        all_refuted = false;
        break;
      case decision::unknown:
        all_refuted = false;
        break;
      case decision::refuted:
        break;
      }
      if (met)
        break;
    }
    if (!met) {
      if (all_refuted)
        return decision::refuted;
      any_unknown = true;
    }
    if (J.constant_from() && j >= *J.constant_from()) {
      tail_known = true;
      break;
    }
  }
  if (tail_known && !any_unknown)
    return decision::confirmed;
  return decision::unknown;
}

} // namespace idealval
