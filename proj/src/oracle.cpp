/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/oracle.hpp"

namespace idealval {

code_enumeration enumeration_of(const code_set& A)
{
  return enumeration_of(std::vector<code>(A.begin(), A.end()));
}

code_enumeration enumeration_of(std::vector<code> codes)
{
  return [codes = std::move(codes)](std::size_t i) -> std::optional<code> {
    if (i >= codes.size())
      return std::nullopt;
    return codes[i];
  };
}

decision exceeds(const lower_real& x, const rat& q, std::size_t fuel)
{
  if (x.exact)
    return *x.exact > ext_rat(q) ? decision::confirmed : decision::refuted;
  for (std::size_t n = 0; n <= fuel; ++n)
    if (x.at(n) > q)
      return decision::confirmed;
  return decision::unknown;
}

decision subbasic_gt(const valuation_oracle& nu, const open_expr& u,
                     const rat& q, std::size_t fuel)
{
  if (nu.has_exact() && u.kind != open_expr::node::enum_union)
    return nu.exact_eval(u) > ext_rat(q) ? decision::confirmed : decision::refuted;
  return exceeds(nu.eval(u), q, fuel);
}

bool check_strictness(const valuation_oracle& nu)
{
  if (!nu.has_exact())
    throw std::invalid_argument("check_strictness: exact oracle required");
  return nu.exact_eval(open_expr::empty()) == ext_rat(0);
}

bool check_modularity(const valuation_oracle& nu, const open_expr& u,
                      const open_expr& v)
{
  if (!nu.has_exact())
    throw std::invalid_argument("check_modularity: exact oracle required");
  const ext_rat a = nu.exact_eval(u);
  const ext_rat b = nu.exact_eval(v);
  const ext_rat j = nu.exact_eval(open_expr::unions({u, v}));
  const ext_rat m = nu.exact_eval(open_expr::intersects({u, v}));
  return a + b == j + m;
}

std::pair<open_expr, open_expr> zone_opens(const code_set& D, const code_set& G)
{
  if (G.empty() || !G.subset_of(D))
    throw std::invalid_argument("zone_opens: need non-empty G inside D");
  std::vector<open_expr> gs;
  for (code b : G)
    gs.push_back(open_expr::basic(b));
  open_expr u = open_expr::intersects(gs);
  const code_set rest = set_difference(D, G);
  open_expr v = rest.empty() ? open_expr::empty()
                             : open_expr::intersects({u, open_expr::unions(rest)});
  return {std::move(u), std::move(v)};
}

bool sum_of_differences_check(const valuation_oracle& nu, const code_set& D,
                              const std::vector<code_set>& P)
{
  if (!nu.has_exact())
    throw std::invalid_argument("sum_of_differences_check: exact oracle required");
  for (const code_set& G : P)
    if (G.empty() || !G.subset_of(D))
      throw std::invalid_argument("sum_of_differences_check: P must contain non-empty subsets of D");
  // validate upward closure within D
  const std::size_t n = D.size();
  std::vector<code> dv(D.begin(), D.end());
  auto in_p = [&](const code_set& G) {
    for (const code_set& H : P)
      if (H == G)
        return true;
    return false;
  };
  for (const code_set& G : P)
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      code_set H;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i))
          H.insert(dv[i]);
      if (G.subset_of(H) && !in_p(H))
        throw std::invalid_argument("sum_of_differences_check: P is not an upper set");
    }

  rat lhs = 0;
  std::vector<open_expr> zone_unions;
  for (const code_set& G : P) {
    auto [u, v] = zone_opens(D, G);
    const ext_rat vu = nu.exact_eval(u);
    if (vu.is_inf())
      throw std::domain_error("sum_of_differences_check: infinite zone mass");
    const ext_rat vv = nu.exact_eval(v);
    lhs += vu.finite_value() - vv.finite_value();
    zone_unions.push_back(std::move(u));
  }
  const ext_rat rhs = nu.exact_eval(open_expr::unions(std::move(zone_unions)));
  return !rhs.is_inf() && lhs == rhs.finite_value();
}

} // namespace idealval
