/* SPDX-License-Identifier: Apache-2.0 */

#include "idealval/rational.hpp"

namespace idealval {

rat frac(long long num, unsigned long long den)
{
  if (den == 0)
    throw std::invalid_argument("frac: zero denominator");
  rat q(mpz_class((long)num), mpz_class((unsigned long)den));
  q.canonicalize();
  return q;
}

rat half_pow(std::size_t k)
{
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, (unsigned long)k);
  rat q(mpz_class(1), d);
  q.canonicalize();
  return q;
}

rat parse_rat(const std::string& text)
{
  if (text.empty())
    throw std::invalid_argument("empty rational");
  for (char c : text)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational syntax: " + text);
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational syntax: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string show_rat(const rat& q)
{
  return q.get_str();
}

ext_rat parse_ext_rat(const std::string& text)
{
  if (text == "inf")
    return ext_rat::inf();
  return ext_rat(parse_rat(text));
}

std::string show_ext_rat(const ext_rat& v)
{
  return v.is_inf() ? "inf" : show_rat(v.value);
}

} // namespace idealval
