/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace idealval {

/* Exact rational arithmetic throughout; the strict inequalities in the
 * decision procedures make floating point unsound. */
using rat = mpq_class;

/* Canonical fraction; two-argument mpq construction alone does not
 * canonicalize. */
rat frac(long long num, unsigned long long den);

/* 2^-k, exact for any k. */
rat half_pow(std::size_t k);

/* Parses "p/q" or "p" (exact fraction syntax). Throws std::invalid_argument
 * on anything else, including q = 0. */
rat parse_rat(const std::string& text);

/* Canonical form, "p/q" or "p" when the denominator is 1. */
std::string show_rat(const rat& q);

/* A non-negative rational extended with a top element; closed under
 * addition, totally ordered, infinity absorbs. */
struct ext_rat {
  bool infinite = false;
  rat value = 0;

  ext_rat() = default;
  ext_rat(rat v) : value(std::move(v)) {}
  ext_rat(long v) : value(v) {}
  ext_rat(int v) : value(v) {}

  static ext_rat inf()
  {
    ext_rat e;
    e.infinite = true;
    return e;
  }

  bool is_inf() const { return infinite; }

  const rat& finite_value() const
  {
    if (infinite)
      throw std::domain_error("ext_rat: finite_value of infinity");
    return value;
  }

  friend ext_rat operator+(const ext_rat& a, const ext_rat& b)
  {
    if (a.infinite || b.infinite)
      return inf();
    return ext_rat(a.value + b.value);
  }

  friend bool operator==(const ext_rat& a, const ext_rat& b)
  {
    if (a.infinite || b.infinite)
      return a.infinite == b.infinite;
    return a.value == b.value;
  }

  friend bool operator!=(const ext_rat& a, const ext_rat& b) { return !(a == b); }

  friend bool operator<(const ext_rat& a, const ext_rat& b)
  {
    if (a.infinite)
      return false;
    if (b.infinite)
      return true;
    return a.value < b.value;
  }

  friend bool operator<=(const ext_rat& a, const ext_rat& b) { return a < b || a == b; }
  friend bool operator>(const ext_rat& a, const ext_rat& b) { return b < a; }
  friend bool operator>=(const ext_rat& a, const ext_rat& b) { return b <= a; }

  friend bool operator<(const rat& a, const ext_rat& b) { return ext_rat(a) < b; }
  friend bool operator<(const ext_rat& a, const rat& b) { return a < ext_rat(b); }
};

/* "inf" or exact fraction syntax. */
ext_rat parse_ext_rat(const std::string& text);
std::string show_ext_rat(const ext_rat& v);

} // namespace idealval
