/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/encodings.hpp"

namespace idealval {

code cantor_pair(code a, code b)
{
  const unsigned __int128 s = (unsigned __int128)a + b;
  const unsigned __int128 r = s * (s + 1) / 2 + b;
  if (r > (unsigned __int128)~(code)0)
    throw std::overflow_error("cantor_pair: code overflow");
  return (code)r;
}

std::pair<code, code> cantor_unpair(code n)
{
  // largest s with s(s+1)/2 <= n
  unsigned __int128 lo = 0, hi = 0x200000000ull;
  while (lo < hi) {
    const unsigned __int128 mid = (lo + hi + 1) / 2;
    if (mid * (mid + 1) / 2 <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  const code s = (code)lo;
  const code b = n - (code)(lo * (lo + 1) / 2);
  return {s - b, b};
}

code zigzag(long long v)
{
  return v >= 0 ? (code)v * 2 : (code)(-(v + 1)) * 2 + 1;
}

long long unzigzag(code n)
{
  return n % 2 == 0 ? (long long)(n / 2) : -(long long)(n / 2) - 1;
}

code encode_rat(const rat& q)
{
  rat c = q;
  c.canonicalize();
  if (!c.get_num().fits_slong_p() || !c.get_den().fits_ulong_p())
    throw std::overflow_error("encode_rat: numerator or denominator too large");
  return cantor_pair(zigzag(c.get_num().get_si()), c.get_den().get_ui() - 1);
}

rat decode_rat(code n)
{
  auto [zn, dm] = cantor_unpair(n);
  rat q(unzigzag(zn), (unsigned long)dm + 1);
  q.canonicalize();
  return q;
}

code encode_bits(const std::vector<bool>& s)
{
  if (s.size() > 62)
    throw std::length_error("encode_bits: string longer than 62");
  code value = 0;
  for (bool b : s)
    value = value * 2 + (b ? 1 : 0);
  return ((code)1 << s.size()) - 1 + value;
}

std::vector<bool> decode_bits(code n)
{
  std::size_t len = 0;
  while (((code)1 << (len + 1)) - 1 <= n)
    ++len;
  code value = n - (((code)1 << len) - 1);
  std::vector<bool> s(len);
  for (std::size_t i = 0; i < len; ++i)
    s[len - 1 - i] = (value >> i) & 1;
  return s;
}

std::string show_bits(const std::vector<bool>& s)
{
  std::string out;
  for (bool b : s)
    out += b ? '1' : '0';
  return out.empty() ? "e" : out;
}

code encode_interval(const rat& lo, const rat& hi)
{
  return cantor_pair(encode_rat(lo), encode_rat(hi));
}

interval decode_interval(code n)
{
  auto [a, b] = cantor_unpair(n);
  return {decode_rat(a), decode_rat(b)};
}

} // namespace idealval
