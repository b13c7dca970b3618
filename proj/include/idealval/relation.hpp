/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace idealval {

using code = std::uint64_t;

enum class decision { confirmed, refuted, unknown };

/* Finite set of codes, kept sorted and duplicate-free. */
struct code_set {
  std::vector<code> elems;

  code_set() = default;
  code_set(std::initializer_list<code> xs) : elems(xs) { normalize(); }
  explicit code_set(std::vector<code> xs) : elems(std::move(xs)) { normalize(); }

  bool empty() const { return elems.empty(); }
  std::size_t size() const { return elems.size(); }
  bool contains(code c) const
  {
    return std::binary_search(elems.begin(), elems.end(), c);
  }
  void insert(code c)
  {
    auto it = std::lower_bound(elems.begin(), elems.end(), c);
    if (it == elems.end() || *it != c)
      elems.insert(it, c);
  }

  auto begin() const { return elems.begin(); }
  auto end() const { return elems.end(); }

  bool subset_of(const code_set& o) const
  {
    return std::includes(o.elems.begin(), o.elems.end(), elems.begin(), elems.end());
  }

  friend code_set set_union(const code_set& a, const code_set& b)
  {
    code_set r;
    std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                   std::back_inserter(r.elems));
    return r;
  }

  friend code_set set_intersect(const code_set& a, const code_set& b)
  {
    code_set r;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                          b.elems.end(), std::back_inserter(r.elems));
    return r;
  }

  friend code_set set_difference(const code_set& a, const code_set& b)
  {
    code_set r;
    std::set_difference(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(r.elems));
    return r;
  }

  friend bool operator==(const code_set&, const code_set&) = default;
  friend bool operator<(const code_set& a, const code_set& b) { return a.elems < b.elems; }

private:
  void normalize()
  {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  }
};

/* Presentation of a space as a countable transitive relation on codes.
 * Finite presentations materialize their universe; countable ones expose a
 * total code enumerator instead. Immutable and safely shareable. */
struct relation {
  std::vector<code> universe;                     // materialized codes (finite case)
  std::function<bool(code, code)> prec_fn;
  std::function<code(std::size_t)> enumerate_fn;  // countable case only
  bool finite = true;

  bool prec(code a, code b) const { return prec_fn(a, b); }
};

/* Smallest transitive relation containing the edges; idempotent on
 * already-transitive input. The universe is the set of endpoints plus any
 * explicitly listed extra codes. */
relation transitive_closure(const std::vector<std::pair<code, code>>& edges,
                            const std::vector<code>& extra_codes = {});

/* As above but validates transitivity instead of closing; throws
 * std::invalid_argument when an edge is missing. */
relation finite_relation(const std::vector<std::pair<code, code>>& edges,
                         const std::vector<code>& extra_codes = {});

bool is_transitive(const relation& rel);

/* An ascending sequence representing an ideal by its downward closure.
 * Materialized lazily and memoized; single-consumer, clone for concurrent
 * use. constant_from = k means at(i) == at(k) for all i >= k. */
template <typename T>
class chain {
public:
  chain() = default;
  chain(std::function<T(std::size_t)> at, std::optional<std::size_t> constant_from = {})
      : at_fn_(std::move(at)), constant_from_(constant_from),
        prefix_(std::make_shared<std::vector<T>>())
  {
  }

  static chain constant(T value)
  {
    return chain([value](std::size_t) { return value; }, 0);
  }

  static chain from_values(std::vector<T> values, bool constant_tail)
  {
    if (values.empty())
      throw std::invalid_argument("chain: empty value list");
    std::optional<std::size_t> cf;
    if (constant_tail)
      cf = values.size() - 1;
    auto vs = std::make_shared<std::vector<T>>(std::move(values));
    return chain(
        [vs](std::size_t i) { return (*vs)[std::min(i, vs->size() - 1)]; }, cf);
  }

  const T& at(std::size_t i) const
  {
    if (constant_from_ && i > *constant_from_)
      i = *constant_from_;
    while (prefix_->size() <= i)
      prefix_->push_back(at_fn_(prefix_->size()));
    return (*prefix_)[i];
  }

  std::optional<std::size_t> constant_from() const { return constant_from_; }

  chain clone() const
  {
    chain c;
    c.at_fn_ = at_fn_;
    c.constant_from_ = constant_from_;
    c.prefix_ = std::make_shared<std::vector<T>>(*prefix_);
    return c;
  }

private:
  std::function<T(std::size_t)> at_fn_;
  std::optional<std::size_t> constant_from_;
  mutable std::shared_ptr<std::vector<T>> prefix_;
};

using code_chain = chain<code>;
using code_set_chain = chain<code_set>;

/* {c in S | some b in F has b prec c} */
code_set up_set(const relation& rel, const code_set& F, const code_set& S);

/* F prec_U G: every element of G has a predecessor in F. */
bool prec_u(const relation& rel, const code_set& F, const code_set& G);

/* Membership of b in the ideal presented by the chain. Confirms when b
 * equals or precedes a materialized element. Refutes exactly once a
 * constant tail has been scanned; on finite relations a generator chain is
 * additionally refuted once the reachable down-set has been stable for a
 * full window of steps. */
decision ideal_member(const relation& rel, const code_chain& ch, code b,
                      std::size_t fuel);

/* The three ideal conditions, checked by exhaustive quantification over a
 * finite universe. */
bool is_ideal_finite(const relation& rel, const code_set& I);

/* All ideals of a finite presentation. Guarded: at most 16 codes. */
std::vector<code_set> enumerate_ideals_finite(const relation& rel);

/* Membership of the ideal of I in the compact set presented by the
 * prec_U-chain J: every value of J must meet I. */
decision gu_member(const relation& rel, const code_set_chain& J,
                   const code_chain& I, std::size_t fuel);

} // namespace idealval
