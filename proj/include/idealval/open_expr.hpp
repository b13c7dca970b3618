/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/relation.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace idealval {

/* An enumeration of codes; nullopt marks exhaustion, total enumerators
 * never exhaust. */
using code_enumeration = std::function<std::optional<code>(std::size_t)>;

code_enumeration enumeration_of(const code_set& A);
code_enumeration enumeration_of(std::vector<code> codes);

/* Open-set expression over the basic opens of a presentation. Finite
 * expressions form the positive Boolean algebra every bundled oracle
 * evaluates exactly; enumerated unions are evaluated as streams. */
struct open_expr {
  enum class node { empty, basic, union_of, intersect_of, enum_union };

  node kind = node::empty;
  code b = 0;
  std::vector<open_expr> children;
  code_enumeration enumerate;

  static open_expr empty() { return {}; }

  static open_expr basic(code c)
  {
    open_expr e;
    e.kind = node::basic;
    e.b = c;
    return e;
  }

  static open_expr unions(std::vector<open_expr> xs)
  {
    if (xs.empty())
      return empty();
    open_expr e;
    e.kind = node::union_of;
    e.children = std::move(xs);
    return e;
  }

  static open_expr unions(const code_set& A)
  {
    std::vector<open_expr> xs;
    for (code c : A)
      xs.push_back(basic(c));
    return unions(std::move(xs));
  }

  static open_expr intersects(std::vector<open_expr> xs)
  {
    if (xs.empty())
      throw std::invalid_argument("open_expr: empty intersection");
    open_expr e;
    e.kind = node::intersect_of;
    e.children = std::move(xs);
    return e;
  }

  static open_expr enumerated(code_enumeration en)
  {
    open_expr e;
    e.kind = node::enum_union;
    e.enumerate = std::move(en);
    return e;
  }
};

} // namespace idealval
