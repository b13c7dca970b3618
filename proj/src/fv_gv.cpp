/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/fv_gv.hpp"

#include "idealval/encodings.hpp"

#include <cassert>
#include <sstream>

namespace idealval {

namespace {

std::vector<code_set> nonempty_subsets(const code_set& dom)
{
  std::vector<code> v(dom.begin(), dom.end());
  std::vector<code_set> out;
  for (std::uint32_t mask = 1; mask < (1u << v.size()); ++mask) {
    code_set F;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask & (1u << i))
        F.insert(v[i]);
    out.push_back(std::move(F));
  }
  return out;
}

} // namespace

bool fv_member(const relation& rel, const valuation_oracle& nu,
               const simple_valuation& r, std::size_t guard)
{
  (void)rel;
  if (!nu.has_exact())
    throw std::invalid_argument("fv_member: exact oracle required (use the stream path)");
  if (r.empty())
    return true;
  if (r.weights.size() > guard)
    throw std::length_error("fv_member: domain larger than guard");
  for (const code_set& F : nonempty_subsets(r.domain())) {
    const rat sum = mass_over(r, F);
    if (!(ext_rat(sum) < nu.exact_eval(open_expr::unions(F))))
      return false;
  }
  return true;
}

decision fv_member_stream(const relation& rel, const valuation_oracle& nu,
                          const simple_valuation& r, std::size_t fuel,
                          std::size_t guard)
{
  (void)rel;
  if (r.empty())
    return decision::confirmed;
  if (r.weights.size() > guard)
    throw std::length_error("fv_member_stream: domain larger than guard");
  bool all_confirmed = true;
  for (const code_set& F : nonempty_subsets(r.domain())) {
    const rat sum = mass_over(r, F);
    switch (subbasic_gt(nu, open_expr::unions(F), sum, fuel)) {
    case decision::refuted:
      return decision::refuted;
    case decision::unknown:
      all_confirmed = false;
      break;
    case decision::confirmed:
      break;
    }
  }
  return all_confirmed ? decision::confirmed : decision::unknown;
}

simple_valuation fv_directed_merge(const relation& rel, const valuation_oracle& nu,
                                   const simple_valuation& r0,
                                   const simple_valuation& r1,
                                   merge_params* trace, std::size_t guard)
{
  if (!rel.finite)
    throw std::invalid_argument("fv_directed_merge: finite relation required");
  if (!nu.has_exact())
    throw std::invalid_argument("fv_directed_merge: exact oracle required");
  if (!fv_member(rel, nu, r0, guard) || !fv_member(rel, nu, r1, guard))
    throw std::invalid_argument("fv_directed_merge: both inputs must be members");

  merge_params params;
  params.D = set_union(r0.domain(), r1.domain());
  params.bound = rat(1) + r0.total_mass() + r1.total_mass();
  if (params.D.empty()) {
    if (trace)
      *trace = params;
    return {};
  }

  // beta: the worst relative headroom of either input below its bounds
  std::optional<rat> beta;
  for (const simple_valuation* ri : {&r0, &r1})
    for (const code_set& F : nonempty_subsets(ri->domain())) {
      const rat sum = mass_over(*ri, F);
      const ext_rat v = nu.exact_eval(open_expr::unions(F));
      const rat pick = v.is_inf() ? sum + 1 : (sum + v.finite_value()) / 2;
      const rat ratio = (pick - sum) / sum;
      if (!beta || ratio < *beta)
        beta = ratio;
    }
  const rat alpha = rat(1) / (rat(1) + *beta / 2);
  assert(alpha > 0 && alpha < 1);
  params.alpha = alpha;

  simple_valuation s;
  for (const code_set& G : nonempty_subsets(params.D)) {
    auto [ug, vg] = zone_opens(params.D, G);
    const ext_rat vu = nu.exact_eval(ug);
    const ext_rat vv = nu.exact_eval(vg);
    if (vu == vv)
      continue;
    if (vu < vv)
      throw std::logic_error("fv_directed_merge: oracle is not monotone");

    // witnesses whose predecessors inside D are exactly G
    std::vector<code> C;
    for (code c : rel.universe) {
      bool match = true;
      for (code b : params.D)
        if (rel.prec(b, c) != G.contains(b)) {
          match = false;
          break;
        }
      if (match)
        C.push_back(c);
    }
    if (C.empty())
      throw std::logic_error("fv_directed_merge: empty witness zone");

    merge_zone zone;
    zone.G = G;

    std::optional<code> cinf;
    for (code c : C)
      if (nu.exact_eval(open_expr::basic(c)).is_inf()) {
        cinf = c;
        break;
      }

    if (cinf) {
      zone.infinite_branch = true;
      zone.h.insert(*cinf);
      zone.part.weights.emplace(*cinf, params.bound);
    } else {
      if (vu.is_inf())
        throw std::logic_error(
            "fv_directed_merge: infinite zone without an infinite basic");
      const rat target = alpha * (vu.finite_value() - vv.finite_value());
      const rat factor = (rat(1) + alpha) / 2;
      std::vector<rat> fresh_mass; // measure each witness adds beyond the earlier ones
      rat acc = 0;
      std::optional<std::size_t> cutoff;
      std::vector<open_expr> prev;
      for (std::size_t i = 0; i < C.size(); ++i) {
        const open_expr ci = open_expr::basic(C[i]);
        std::vector<open_expr> covered = prev;
        covered.push_back(vg);
        const ext_rat a = nu.exact_eval(ci);
        const ext_rat b = nu.exact_eval(
            open_expr::intersects({ci, open_expr::unions(std::move(covered))}));
        if (a.is_inf() || b.is_inf())
          throw std::logic_error("fv_directed_merge: unexpected infinite witness");
        const rat p = a.finite_value() - b.finite_value();
        assert(p >= 0);
        fresh_mass.push_back(p);
        acc += p;
        prev.push_back(ci);
        if (factor * acc >= target) {
          cutoff = i;
          break;
        }
      }
      assert(cutoff); // reachable: the zone is exhausted by its witnesses
      for (std::size_t i = 0; i <= *cutoff; ++i)
        if (fresh_mass[i] > 0) {
          zone.h.insert(C[i]);
          zone.part.weights.emplace(C[i], fresh_mass[i] * (rat(3) + alpha) / 4);
        }
    }

    for (const auto& [c, w] : zone.part.weights) {
      assert(!s.weights.count(c)); // zones are disjoint
      s.weights.emplace(c, w);
    }
    params.zones.push_back(std::move(zone));
  }

  if (trace)
    *trace = params;
  return s;
}

namespace {

/* Canonical surjection from indices onto the formal sums over the finite
 * universe: the index splits into a domain part (bit set over the universe)
 * and a weight part (iterated pairs, each decoding a positive rational). */
simple_valuation formal_sum_at(const std::vector<code>& universe, code index)
{
  auto [d, w] = cantor_unpair(index);
  simple_valuation r;
  std::vector<code> dom;
  for (std::size_t i = 0; i < universe.size() && d; ++i, d >>= 1)
    if (d & 1)
      dom.push_back(universe[i]);
  if (d)
    return {}; // bits beyond the universe: treat as the empty sum
  for (std::size_t j = 0; j < dom.size(); ++j) {
    code wj = w;
    if (j + 1 < dom.size()) {
      auto [head, rest] = cantor_unpair(w);
      wj = head;
      w = rest;
    }
    auto [a, b] = cantor_unpair(wj);
    r.weights.emplace(dom[j], frac((long long)a + 1, (unsigned long long)b + 1));
  }
  return r;
}

} // namespace

valuation_chain fv_chain(const relation& rel, const valuation_oracle& nu,
                         std::size_t guard)
{
  if (!rel.finite)
    throw std::invalid_argument("fv_chain: finite relation required");
  if (!nu.has_exact())
    throw std::invalid_argument("fv_chain: exact oracle required");

  if (nu.exact_eval(open_expr::unions(code_set(rel.universe))) == ext_rat(0))
    return valuation_chain::constant(simple_valuation{});

  struct fold_state {
    simple_valuation current;
    code cursor = 0;
  };
  auto st = std::make_shared<fold_state>();
  auto relp = std::make_shared<relation>(rel);
  auto nup = std::make_shared<valuation_oracle>(nu);

  // chain prefixes materialize in order, so the fold state advances once
  // per fresh index
  return valuation_chain([st, relp, nup, guard](std::size_t i) -> simple_valuation {
    if (i == 0)
      return st->current; // the empty sum
    for (;;) {
      const simple_valuation b = formal_sum_at(relp->universe, st->cursor++);
      if (b.empty())
        continue;
      if (!fv_member(*relp, *nup, b, guard))
        continue;
      st->current = fv_directed_merge(*relp, *nup, st->current, b, nullptr, guard);
      return st->current;
    }
  });
}

lower_real gv_eval(const relation& rel, const valuation_chain& ch,
                   code_enumeration A)
{
  auto relp = std::make_shared<relation>(rel);
  auto seen = std::make_shared<std::vector<code>>();
  auto exhausted = std::make_shared<bool>(false);
  lower_real x;
  x.approx = [relp, ch, A = std::move(A), seen, exhausted](std::size_t n) {
    while (!*exhausted && seen->size() <= n) {
      const auto c = A(seen->size());
      if (!c) {
        *exhausted = true;
        break;
      }
      seen->push_back(*c);
    }
    rat best = 0;
    std::size_t last = n;
    if (ch.constant_from())
      last = std::min(last, *ch.constant_from());
    for (std::size_t i = 0; i <= last; ++i) {
      const simple_valuation& r = ch.at(i);
      rat mass = 0;
      for (const auto& [c, w] : r.weights)
        for (code a : *seen)
          if (relp->prec(a, c)) {
            mass += w;
            break;
          }
      if (mass > best)
        best = mass;
    }
    return best;
  };
  return x;
}

bool report::all_pass() const
{
  for (const check_line& l : lines)
    if (l.status != check_status::pass)
      return false;
  return true;
}

std::size_t report::count(check_status s) const
{
  std::size_t n = 0;
  for (const check_line& l : lines)
    if (l.status == s)
      ++n;
  return n;
}

std::string show(const report& rep)
{
  std::ostringstream os;
  for (const check_line& l : rep.lines) {
    os << "CHECK " << l.name << ' ';
    switch (l.status) {
    case check_status::pass:
      os << "PASS";
      break;
    case check_status::fail:
      os << "FAIL";
      break;
    case check_status::unknown:
      os << "UNKNOWN";
      break;
    }
    if (!l.details.empty())
      os << ' ' << l.details;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string show_codes(const code_set& A)
{
  std::string out = "{";
  bool first = true;
  for (code c : A) {
    if (!first)
      out += ' ';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

} // namespace

report roundtrip_gf_check(const relation& rel, const valuation_oracle& nu,
                          const rat& epsilon, std::size_t fuel)
{
  if (!rel.finite || !nu.has_exact())
    throw std::invalid_argument("roundtrip_gf_check: finite relation and exact oracle required");
  if (epsilon < 0)
    throw std::invalid_argument("roundtrip_gf_check: negative epsilon");

  const finite_space sp = finite_space::of(rel);
  const valuation_chain ch = fv_chain(rel, nu);

  report rep;
  for (const auto& [A, mask] : sp.all_opens()) {
    const ext_rat target = nu.exact_eval(open_expr::unions(A));
    if (target.is_inf() && !(epsilon > 0))
      throw std::invalid_argument("roundtrip_gf_check: infinite target needs positive epsilon");
    const rat goal = target.is_inf() ? rat(1) / epsilon : target.finite_value() - epsilon;
    lower_real stream = gv_eval(rel, ch, enumeration_of(A));

    check_line line;
    line.name = "gf-roundtrip" + show_codes(A);
    bool exceeded = false;
    bool reached = false;
    rat best = 0;
    for (std::size_t f = 1;; f *= 2) {
      f = std::min(f, std::max<std::size_t>(fuel, 1));
      best = stream.at(f);
      if (!target.is_inf() && best > target.finite_value()) {
        exceeded = true;
        break;
      }
      if (best >= goal) {
        reached = true;
        break;
      }
      if (f >= fuel)
        break;
    }
    if (exceeded) {
      line.status = check_status::fail;
      line.details = "lower bound " + show_rat(best) + " exceeds " +
                     show_ext_rat(target);
    } else if (reached) {
      line.status = check_status::pass;
      line.details = "reached " + show_rat(best) + " of " + show_ext_rat(target);
    } else {
      line.status = check_status::fail;
      line.details = "stalled at " + show_rat(best) + " of " + show_ext_rat(target);
    }
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

namespace {

enum class side { in, out_exact, out_fuel };

side chain_side(const relation& rel, const valuation_chain& ch,
                const simple_valuation& r, std::size_t fuel, std::size_t guard)
{
  for (std::size_t i = 0; i < std::max<std::size_t>(fuel, 1); ++i) {
    if (prec_v(rel, r, ch.at(i), guard))
      return side::in;
    if (ch.constant_from() && i >= *ch.constant_from())
      return side::out_exact;
  }
  return side::out_fuel;
}

side fgv_side(const relation& rel, const valuation_chain& ch,
              const simple_valuation& r, std::size_t fuel, std::size_t guard)
{
  if (r.empty())
    return side::in;
  if (r.weights.size() > guard)
    throw std::length_error("roundtrip_fg_check: sample domain larger than guard");
  bool all_in = true;
  for (const code_set& F : nonempty_subsets(r.domain())) {
    const rat sum = mass_over(r, F);
    if (ch.constant_from()) {
      // the whole chain is visible: the ideal's measure of the F-union is
      // the best restricted mass among the distinct elements
      rat best = 0;
      for (std::size_t i = 0; i <= *ch.constant_from(); ++i) {
        const simple_valuation& t = ch.at(i);
        const rat m = mass_over(t, up_set(rel, F, t.domain()));
        if (m > best)
          best = m;
      }
      if (!(sum < best))
        return side::out_exact;
    } else {
      lower_real stream = gv_eval(rel, ch, enumeration_of(F));
      bool confirmed = false;
      for (std::size_t f = 1;; f *= 2) {
        f = std::min(f, std::max<std::size_t>(fuel, 1));
        if (stream.at(f) > sum) {
          confirmed = true;
          break;
        }
        if (f >= fuel)
          break;
      }
      if (!confirmed)
        all_in = false;
    }
  }
  return all_in ? side::in : side::out_fuel;
}

const char* show_side(side s)
{
  switch (s) {
  case side::in:
    return "in";
  case side::out_exact:
    return "out";
  case side::out_fuel:
    return "out-at-fuel";
  }
  return "?";
}

} // namespace

report roundtrip_fg_check(const relation& rel, const valuation_chain& ch,
                          const std::vector<simple_valuation>& samples,
                          std::size_t fuel, std::size_t guard)
{
  report rep;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const simple_valuation& r = samples[k];
    const side c = chain_side(rel, ch, r, fuel, guard);
    const side g = fgv_side(rel, ch, r, fuel, guard);

    check_line line;
    line.name = "fg-sample-" + std::to_string(k);
    line.details = std::string("chain=") + show_side(c) + " rebuilt=" + show_side(g);
    const bool c_in = c == side::in;
    const bool g_in = g == side::in;
    if (c_in == g_in)
      line.status = check_status::pass;
    else if (c == side::out_exact || g == side::out_exact)
      line.status = check_status::fail; // a definitive conflict
    else
      line.status = check_status::unknown; // one side still lacks fuel
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

valuation_chain sierpinski_staircase()
{
  return valuation_chain([](std::size_t i) {
    const rat a = frac(1, 2) * (rat(1) - half_pow(i + 1));
    simple_valuation s;
    s.weights.emplace(0, a);
    s.weights.emplace(1, a);
    return s;
  });
}

valuation_chain point_staircase(const relation& rel, const code_chain& x)
{
  (void)rel;
  return valuation_chain([x](std::size_t i) {
    simple_valuation s;
    s.weights.emplace(x.at(i), rat(1) - half_pow(i + 1));
    return s;
  });
}

valuation_chain lebesgue_staircase(std::size_t max_level)
{
  return valuation_chain([max_level](std::size_t i) {
    if (i > max_level)
      throw std::length_error("lebesgue_staircase: level guard exceeded");
    const unsigned long cells = 1ul << i;
    const rat margin = half_pow(i + 2); // quarter cell
    const rat weight = (rat(1) - half_pow(i + 1)) * half_pow(i);
    simple_valuation s;
    for (unsigned long k = 0; k < cells; ++k) {
      const rat lo = frac((long long)k, cells) - margin;
      const rat hi = frac((long long)k + 1, cells) + margin;
      s.weights.emplace(encode_interval(lo, hi), weight);
    }
    return s;
  });
}

valuation_chain cantor_staircase(const rat& p, std::size_t max_level)
{
  if (!(p > 0 && p < 1))
    throw std::invalid_argument("cantor_staircase: bias must lie strictly between 0 and 1");
  return valuation_chain([p, max_level](std::size_t i) {
    if (i > max_level)
      throw std::length_error("cantor_staircase: level guard exceeded");
    const rat shrink = rat(1) - half_pow(i + 1);
    simple_valuation s;
    for (code v = 0; v < (code(1) << i); ++v) {
      std::vector<bool> bits(i);
      for (std::size_t j = 0; j < i; ++j)
        bits[i - 1 - j] = (v >> j) & 1;
      rat mu = 1;
      for (bool bit : bits)
        mu *= bit ? rat(1) - p : p;
      s.weights.emplace(encode_bits(bits), mu * shrink);
    }
    return s;
  });
}

} // namespace idealval
