/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/spaces.hpp"

#include <cassert>
#include <map>

namespace idealval {

namespace {

bool contains_enum_union(const open_expr& e)
{
  if (e.kind == open_expr::node::enum_union)
    return true;
  for (const open_expr& c : e.children)
    if (contains_enum_union(c))
      return true;
  return false;
}

std::vector<bool> mask_or(std::vector<bool> a, const std::vector<bool>& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = a[i] || b[i];
  return a;
}

std::vector<bool> mask_and(std::vector<bool> a, const std::vector<bool>& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = a[i] && b[i];
  return a;
}

bool mask_eq(const std::vector<bool>& a, const std::vector<bool>& b)
{
  return a == b;
}

} // namespace

finite_space finite_space::of(const relation& rel)
{
  if (!rel.finite)
    throw std::invalid_argument("finite_space: relation is not finite");
  finite_space sp;
  sp.rel = rel;
  sp.ideals = enumerate_ideals_finite(rel);
  return sp;
}

std::vector<bool> finite_space::basic_open(code b) const
{
  std::vector<bool> m(ideals.size(), false);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    m[i] = ideals[i].contains(b);
  return m;
}

std::vector<bool> finite_space::eval_open(const open_expr& e) const
{
  switch (e.kind) {
  case open_expr::node::empty:
    return std::vector<bool>(ideals.size(), false);
  case open_expr::node::basic:
    return basic_open(e.b);
  case open_expr::node::union_of: {
    std::vector<bool> m(ideals.size(), false);
    for (const open_expr& c : e.children)
      m = mask_or(std::move(m), eval_open(c));
    return m;
  }
  case open_expr::node::intersect_of: {
    std::vector<bool> m = eval_open(e.children.front());
    for (std::size_t i = 1; i < e.children.size(); ++i)
      m = mask_and(std::move(m), eval_open(e.children[i]));
    return m;
  }
  case open_expr::node::enum_union: {
    std::vector<bool> cover(ideals.size(), false);
    for (code b : rel.universe)
      cover = mask_or(std::move(cover), basic_open(b));
    std::vector<bool> m(ideals.size(), false);
    const std::size_t window = rel.universe.size() + 8;
    std::size_t stable = 0;
    for (std::size_t i = 0; stable < window; ++i) {
      const auto c = e.enumerate(i);
      if (!c)
        break;
      const std::vector<bool> next = mask_or(m, basic_open(*c));
      stable = mask_eq(next, m) ? stable + 1 : 0;
      m = next;
      if (mask_eq(m, cover))
        break;
    }
    return m;
  }
  }
  return std::vector<bool>(ideals.size(), false);
}

std::vector<std::pair<code_set, std::vector<bool>>> finite_space::all_opens() const
{
  const std::size_t n = rel.universe.size();
  if (n > 16)
    throw std::length_error("all_opens: more than 16 codes");
  std::map<std::vector<bool>, code_set> seen;
  std::vector<std::vector<bool>> basics;
  for (code b : rel.universe)
    basics.push_back(basic_open(b));
  auto mask_subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i])
        return false;
    return true;
  };
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<bool> m(ideals.size(), false);
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i))
        m = mask_or(std::move(m), basics[i]);
    if (seen.count(m))
      continue;
    code_set maximal;
    for (std::size_t i = 0; i < n; ++i)
      if (mask_subset(basics[i], m))
        maximal.insert(rel.universe[i]);
    seen.emplace(std::move(m), std::move(maximal));
  }
  std::vector<std::pair<code_set, std::vector<bool>>> out;
  for (auto& [m, a] : seen)
    out.emplace_back(a, m);
  return out;
}

valuation_oracle make_finite_valuation(
    const relation& rel, const std::vector<std::pair<code_set, ext_rat>>& point_masses)
{
  auto sp = std::make_shared<finite_space>(finite_space::of(rel));
  auto masses = std::make_shared<std::vector<ext_rat>>(sp->ideals.size(), ext_rat(0));
  std::vector<bool> assigned(sp->ideals.size(), false);
  for (const auto& [I, m] : point_masses) {
    if (!is_ideal_finite(rel, I))
      throw std::invalid_argument("make_finite_valuation: key is not an ideal");
    const auto it = std::find(sp->ideals.begin(), sp->ideals.end(), I);
    assert(it != sp->ideals.end());
    const std::size_t idx = (std::size_t)(it - sp->ideals.begin());
    if (assigned[idx])
      throw std::invalid_argument("make_finite_valuation: duplicate ideal key");
    assigned[idx] = true;
    (*masses)[idx] = m;
  }

  auto total_of = [sp, masses](const std::vector<bool>& m) {
    ext_rat t(0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i])
        t = t + (*masses)[i];
    return t;
  };

  valuation_oracle nu;
  nu.exact_eval = [sp, total_of](const open_expr& e) { return total_of(sp->eval_open(e)); };
  nu.eval = [sp, masses, total_of](const open_expr& e) -> lower_real {
    if (!contains_enum_union(e))
      return lower_real::of(total_of(sp->eval_open(e)));
    lower_real x;
    x.approx = [sp, masses, e](std::size_t n) {
      // evaluate with enumerated unions cut to their first n+1 items
      std::function<std::vector<bool>(const open_expr&)> go =
          [&](const open_expr& u) -> std::vector<bool> {
        switch (u.kind) {
        case open_expr::node::empty:
          return std::vector<bool>(sp->ideals.size(), false);
        case open_expr::node::basic:
          return sp->basic_open(u.b);
        case open_expr::node::union_of: {
          std::vector<bool> m(sp->ideals.size(), false);
          for (const open_expr& c : u.children)
            m = mask_or(std::move(m), go(c));
          return m;
        }
        case open_expr::node::intersect_of: {
          std::vector<bool> m = go(u.children.front());
          for (std::size_t i = 1; i < u.children.size(); ++i)
            m = mask_and(std::move(m), go(u.children[i]));
          return m;
        }
        case open_expr::node::enum_union: {
          std::vector<bool> m(sp->ideals.size(), false);
          for (std::size_t i = 0; i <= n; ++i) {
            const auto c = u.enumerate(i);
            if (!c)
              break;
            m = mask_or(std::move(m), sp->basic_open(*c));
          }
          return m;
        }
        }
        return std::vector<bool>(sp->ideals.size(), false);
      };
      const std::vector<bool> m = go(e);
      rat finite_part = 0;
      bool has_inf = false;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) {
          if ((*masses)[i].is_inf())
            has_inf = true;
          else
            finite_part += (*masses)[i].value;
        }
      return has_inf ? finite_part + rat((unsigned long)n) : finite_part;
    };
    return x;
  };
  return nu;
}

namespace {

// Membership of the chain's point in an open expression, semidecided at fuel.
decision point_in_open(const relation& rel, const code_chain& x,
                       const open_expr& e, std::size_t fuel)
{
  switch (e.kind) {
  case open_expr::node::empty:
    return decision::refuted;
  case open_expr::node::basic:
    return ideal_member(rel, x, e.b, std::max<std::size_t>(fuel, 1));
  case open_expr::node::union_of: {
    bool all_refuted = true;
    for (const open_expr& c : e.children) {
      const decision d = point_in_open(rel, x, c, fuel);
      if (d == decision::confirmed)
        return decision::confirmed;
      if (d != decision::refuted)
        all_refuted = false;
    }
    return all_refuted ? decision::refuted : decision::unknown;
  }
  case open_expr::node::intersect_of: {
    bool all_confirmed = true;
    for (const open_expr& c : e.children) {
      const decision d = point_in_open(rel, x, c, fuel);
      if (d == decision::refuted)
        return decision::refuted;
      if (d != decision::confirmed)
        all_confirmed = false;
    }
    return all_confirmed ? decision::confirmed : decision::unknown;
  }
  case open_expr::node::enum_union: {
    code_set seen;
    bool exhausted = false;
    for (std::size_t i = 0; i <= fuel; ++i) {
      const auto c = e.enumerate(i);
      if (!c) {
        exhausted = true;
        break;
      }
      seen.insert(*c);
      if (ideal_member(rel, x, *c, std::max<std::size_t>(fuel, 1)) == decision::confirmed)
        return decision::confirmed;
    }
    if (exhausted)
      return decision::refuted;
    if (rel.finite) {
      code_set uni(rel.universe);
      if (uni.subset_of(seen))
        return decision::refuted; // every further item is a repeat or inert
    }
    return decision::unknown;
  }
  }
  return decision::unknown;
}

} // namespace

valuation_oracle dirac(const relation& rel, const code_chain& x)
{
  const bool exact_ok = rel.finite && x.constant_from().has_value();
  const std::size_t exact_fuel =
      exact_ok ? *x.constant_from() + rel.universe.size() + 2 : 0;

  auto relp = std::make_shared<relation>(rel);
  valuation_oracle nu;
  nu.eval = [relp, x](const open_expr& e) -> lower_real {
    lower_real v;
    v.approx = [relp, x, e](std::size_t n) {
      return point_in_open(*relp, x, e, n) == decision::confirmed ? rat(1) : rat(0);
    };
    return v;
  };
  if (exact_ok)
    nu.exact_eval = [relp, x, exact_fuel](const open_expr& e) -> ext_rat {
      const decision d =
          point_in_open(*relp, x, e, std::max<std::size_t>(exact_fuel, 100000));
      if (d == decision::unknown)
        throw std::domain_error("dirac: expression not decidable on this space");
      return d == decision::confirmed ? ext_rat(1) : ext_rat(0);
    };
  return nu;
}

relation sierpinski()
{
  return transitive_closure({{0, 0}, {0, 1}, {1, 1}});
}

valuation_oracle sierpinski_mixture()
{
  return make_finite_valuation(sierpinski(),
                               {{code_set{0}, ext_rat(rat(1, 2))},
                                {code_set{0, 1}, ext_rat(rat(1, 2))}});
}

namespace {

// ---- interval line -------------------------------------------------------

using interval_list = std::vector<interval>; // sorted, pairwise disjoint

interval_list normalize_intervals(interval_list xs)
{
  interval_list in;
  for (interval& v : xs)
    if (v.valid())
      in.push_back(std::move(v));
  std::sort(in.begin(), in.end(),
            [](const interval& a, const interval& b) { return a.lo < b.lo; });
  interval_list out;
  for (interval& v : in) {
    if (!out.empty() && v.lo < out.back().hi) {
      if (out.back().hi < v.hi)
        out.back().hi = v.hi;
    } else {
      out.push_back(std::move(v));
    }
  }
  return out;
}

interval_list intersect_lists(const interval_list& a, const interval_list& b)
{
  interval_list out;
  for (const interval& x : a)
    for (const interval& y : b) {
      interval z{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
      if (z.valid())
        out.push_back(std::move(z));
    }
  return normalize_intervals(std::move(out));
}

constexpr std::size_t enum_cap = 1u << 20;

interval_list interval_nf(const open_expr& e, std::size_t enum_cut)
{
  switch (e.kind) {
  case open_expr::node::empty:
    return {};
  case open_expr::node::basic:
    return normalize_intervals({decode_interval(e.b)});
  case open_expr::node::union_of: {
    interval_list all;
    for (const open_expr& c : e.children) {
      interval_list part = interval_nf(c, enum_cut);
      all.insert(all.end(), part.begin(), part.end());
    }
    return normalize_intervals(std::move(all));
  }
  case open_expr::node::intersect_of: {
    interval_list m = interval_nf(e.children.front(), enum_cut);
    for (std::size_t i = 1; i < e.children.size(); ++i)
      m = intersect_lists(m, interval_nf(e.children[i], enum_cut));
    return m;
  }
  case open_expr::node::enum_union: {
    interval_list all;
    std::size_t i = 0;
    for (; i < enum_cut; ++i) {
      const auto c = e.enumerate(i);
      if (!c)
        break;
      interval v = decode_interval(*c);
      if (v.valid())
        all.push_back(std::move(v));
    }
    // exact evaluation demands a finite enumeration
    if (i == enum_cap && e.enumerate(i))
      throw std::domain_error("interval oracle: enumerated union is not finite");
    return normalize_intervals(std::move(all));
  }
  }
  return {};
}

rat interval_measure(const interval_list& xs, bool clip)
{
  rat total = 0;
  for (const interval& v : xs) {
    rat lo = v.lo, hi = v.hi;
    if (clip) {
      if (lo < 0)
        lo = 0;
      if (hi > 1)
        hi = 1;
    }
    if (lo < hi)
      total += hi - lo;
  }
  return total;
}

std::pair<relation, valuation_oracle> line_space(bool clip)
{
  relation rel;
  rel.finite = false;
  rel.prec_fn = [](code a, code b) {
    const interval x = decode_interval(a);
    const interval y = decode_interval(b);
    return x.valid() && y.valid() && x.lo < y.lo && y.hi < x.hi;
  };
  rel.enumerate_fn = [](std::size_t i) { return (code)i; };

  valuation_oracle nu;
  nu.exact_eval = [clip](const open_expr& e) -> ext_rat {
    return ext_rat(interval_measure(interval_nf(e, enum_cap), clip));
  };
  nu.eval = [clip](const open_expr& e) -> lower_real {
    if (!contains_enum_union(e))
      return lower_real::of(ext_rat(interval_measure(interval_nf(e, enum_cap), clip)));
    lower_real x;
    x.approx = [clip, e](std::size_t n) {
      return interval_measure(interval_nf(e, n + 1), clip);
    };
    return x;
  };
  return {std::move(rel), std::move(nu)};
}

// ---- biased-coin Cantor space --------------------------------------------

using cylinder_list = std::vector<std::vector<bool>>; // prefix-free

bool is_prefix(const std::vector<bool>& a, const std::vector<bool>& b)
{
  if (a.size() > b.size())
    return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

cylinder_list prefix_free(cylinder_list xs)
{
  std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cylinder_list out;
  for (auto& s : xs) {
    bool covered = false;
    for (const auto& k : out)
      if (is_prefix(k, s)) {
        covered = true;
        break;
      }
    if (!covered)
      out.push_back(std::move(s));
  }
  return out;
}

cylinder_list intersect_cylinders(const cylinder_list& a, const cylinder_list& b)
{
  cylinder_list out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (is_prefix(x, y))
        out.push_back(y);
      else if (is_prefix(y, x))
        out.push_back(x);
    }
  return prefix_free(std::move(out));
}

cylinder_list cylinder_nf(const open_expr& e, std::size_t enum_cut)
{
  switch (e.kind) {
  case open_expr::node::empty:
    return {};
  case open_expr::node::basic:
    return {decode_bits(e.b)};
  case open_expr::node::union_of: {
    cylinder_list all;
    for (const open_expr& c : e.children) {
      cylinder_list part = cylinder_nf(c, enum_cut);
      all.insert(all.end(), part.begin(), part.end());
    }
    return prefix_free(std::move(all));
  }
  case open_expr::node::intersect_of: {
    cylinder_list m = cylinder_nf(e.children.front(), enum_cut);
    for (std::size_t i = 1; i < e.children.size(); ++i)
      m = intersect_cylinders(m, cylinder_nf(e.children[i], enum_cut));
    return m;
  }
  case open_expr::node::enum_union: {
    cylinder_list all;
    std::size_t i = 0;
    for (; i < enum_cut; ++i) {
      const auto c = e.enumerate(i);
      if (!c)
        break;
      all.push_back(decode_bits(*c));
    }
    if (i == enum_cap && e.enumerate(i))
      throw std::domain_error("cylinder oracle: enumerated union is not finite");
    return prefix_free(std::move(all));
  }
  }
  return {};
}

rat cylinder_measure(const cylinder_list& xs, const rat& p)
{
  rat total = 0;
  for (const auto& s : xs) {
    rat m = 1;
    for (bool bit : s)
      m *= bit ? rat(1) - p : p;
    total += m;
  }
  return total;
}

} // namespace

std::pair<relation, valuation_oracle> lebesgue_line() { return line_space(true); }
std::pair<relation, valuation_oracle> lebesgue_line_unclipped() { return line_space(false); }

std::pair<relation, valuation_oracle> cantor_coin(const rat& p)
{
  if (!(p > 0 && p < 1))
    throw std::invalid_argument("cantor_coin: bias must lie strictly between 0 and 1");

  relation rel;
  rel.finite = false;
  rel.prec_fn = [](code a, code b) {
    const auto s = decode_bits(a);
    const auto t = decode_bits(b);
    return s.size() < t.size() && is_prefix(s, t);
  };
  rel.enumerate_fn = [](std::size_t i) { return (code)i; };

  valuation_oracle nu;
  nu.exact_eval = [p](const open_expr& e) -> ext_rat {
    return ext_rat(cylinder_measure(cylinder_nf(e, enum_cap), p));
  };
  nu.eval = [p](const open_expr& e) -> lower_real {
    if (!contains_enum_union(e))
      return lower_real::of(ext_rat(cylinder_measure(cylinder_nf(e, enum_cap), p)));
    lower_real x;
    x.approx = [p, e](std::size_t n) {
      return cylinder_measure(cylinder_nf(e, n + 1), p);
    };
    return x;
  };
  return {std::move(rel), std::move(nu)};
}

} // namespace idealval
