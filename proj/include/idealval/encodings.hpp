/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "idealval/rational.hpp"
#include "idealval/relation.hpp"

#include <optional>
#include <vector>

namespace idealval {

/* Bijective encoders between the native names of the bundled countable
 * spaces and natural-number codes. Every natural number decodes; encoding
 * canonical representatives is injective. */

/* cantor_pair(a, b) = (a+b)(a+b+1)/2 + b; throws on 64-bit overflow. */
code cantor_pair(code a, code b);
std::pair<code, code> cantor_unpair(code n);

/* Integers via zigzag: 0,-1,1,-2,2,... <-> 0,1,2,3,4,... */
code zigzag(long long v);
long long unzigzag(code n);

/* Rationals: p/q in lowest terms (q >= 1) <-> pair(zigzag(p), q-1).
 * Decoding canonicalizes, so every code names a rational. */
code encode_rat(const rat& q);
rat decode_rat(code n);

/* Bit strings in level order: code(s) = 2^len(s) - 1 + value(s), with the
 * empty string at 0, "0" at 1, "1" at 2, "00" at 3, ... Length <= 62. */
code encode_bits(const std::vector<bool>& s);
std::vector<bool> decode_bits(code n);
std::string show_bits(const std::vector<bool>& s);

/* Rational open intervals: code = pair(encode_rat(lo), encode_rat(hi)).
 * Codes with lo >= hi decode to an empty interval and are inert in the
 * interval relation. */
struct interval {
  rat lo, hi;
  bool valid() const { return lo < hi; }
};
code encode_interval(const rat& lo, const rat& hi);
interval decode_interval(code n);

} // namespace idealval
