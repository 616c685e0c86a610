#ifndef DQP_RATIONAL_HPP
#define DQP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqp {

/// Exact arbitrary-precision fraction. Always stored reduced with a
/// positive denominator; no floating point anywhere in the engine.
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" with q > 0 after reduction. Rejects empty
/// strings, zero denominators and trailing garbage.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  for (char ch : s) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw ParseError("bad character '" + std::string(1, ch) + "' in rational \"" + s + "\"");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("unparsable rational \"" + s + "\"");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

/// Reduced fraction p/q. Plain mpq_class(p, q) is not canonicalized, and
/// comparisons require canonical operands; route integer pairs through here.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
  Rational out(1);
  Rational b = base;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace dqp

#endif
