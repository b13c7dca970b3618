/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/oracle.hpp"
#include "idealval/simple_valuation.hpp"
#include "idealval/spaces.hpp"

#include <string>
#include <vector>

namespace idealval {

/* Membership of a formal sum in the ideal presentation of the valuation:
 * every non-empty F inside dom(r) must have its F-sum strictly below the
 * measure of the union of the F-basics. Exact-oracle path decides. */
bool fv_member(const relation& rel, const valuation_oracle& nu,
               const simple_valuation& r, std::size_t guard = 20);

/* Stream path: confirms via lower bounds, never refutes without an exact
 * short-circuit. */
decision fv_member_stream(const relation& rel, const valuation_oracle& nu,
                          const simple_valuation& r, std::size_t fuel,
                          std::size_t guard = 20);

struct merge_zone {
  code_set G;
  bool infinite_branch = false;
  code_set h;
  simple_valuation part; // weights chosen on h
};

/* The constants and per-zone artifacts of the directedness merge, exposed
 * for verification. */
struct merge_params {
  rat alpha{1, 2}; // in (0,1)
  rat bound = 1;   // 1 + total mass of both inputs
  code_set D;
  std::vector<merge_zone> zones;
};

/* Builds an upper bound of two members of the converted ideal that is
 * itself a member. Finite relations with exact oracles only: there every
 * witness zone is finite and all searches terminate. */
simple_valuation fv_directed_merge(const relation& rel, const valuation_oracle& nu,
                                   const simple_valuation& r0,
                                   const simple_valuation& r1,
                                   merge_params* trace = nullptr,
                                   std::size_t guard = 20);

/* Ascending chain cofinal in the converted ideal of the valuation: folds
 * the canonical enumeration of formal sums, filtered by membership, through
 * the directedness merge. The zero valuation yields the constant empty
 * chain. */
valuation_chain fv_chain(const relation& rel, const valuation_oracle& nu,
                         std::size_t guard = 20);

/* Lower-real evaluation of the chain's ideal on the union of the basics of
 * an enumerated code family: at fuel n, the best mass among the first n+1
 * chain elements restricted to the upward closure of the first n+1 codes.
 * A lower evaluator only; it never claims upper bounds. */
lower_real gv_eval(const relation& rel, const valuation_chain& ch,
                   code_enumeration A);

enum class check_status { pass, fail, unknown };

struct check_line {
  std::string name;
  check_status status;
  std::string details;
};

struct report {
  std::vector<check_line> lines;

  bool all_pass() const;
  std::size_t count(check_status s) const;
};

std::string show(const report& rep);

/* One conversion round trip: for every open of the finite space, the
 * stream of the rebuilt chain must climb to within epsilon below the exact
 * measure (past 1/epsilon for infinite measures) without ever exceeding
 * it, within the fuel budget. */
report roundtrip_gf_check(const relation& rel, const valuation_oracle& nu,
                          const rat& epsilon, std::size_t fuel);

/* The other round trip, as membership agreement: chain membership of each
 * sample against the rebuilt-ideal criterion evaluated through gv_eval
 * lower bounds. Chains with a constant tail are decided exactly. */
report roundtrip_fg_check(const relation& rel, const valuation_chain& ch,
                          const std::vector<simple_valuation>& samples,
                          std::size_t fuel, std::size_t guard = 20);

/* Analytic chains for the bundled spaces; each is validated by fv_member
 * in the test suites. */
valuation_chain sierpinski_staircase();
valuation_chain point_staircase(const relation& rel, const code_chain& x);
valuation_chain lebesgue_staircase(std::size_t max_level = 12);
valuation_chain cantor_staircase(const rat& p, std::size_t max_level = 16);

} // namespace idealval
