#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace newtoric {

/// Arbitrary-precision integers and rationals. Every quantity in the
/// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input that fails validation (bad dimensions, duplicate columns, ...).
struct invalid_input_error : error {
  using error::error;
};

/// The generating set does not span a positive semigroup.
struct not_positive_error : error {
  using error::error;
};

/// An internal cross-check failed; indicates a bug, not bad input.
struct invariant_error : error {
  using error::error;
};

inline Int dot(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw invalid_input_error("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline Rat dot(const RatVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw invalid_input_error("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * Rat(v[i]);
  return s;
}

inline IntVec add(const IntVec& u, const IntVec& v) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

inline IntVec sub(const IntVec& u, const IntVec& v) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

inline IntVec scale(const Int& c, const IntVec& v) {
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

/// Divides by the gcd of the entries; the zero vector is left alone.
inline IntVec primitive(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

/// Clears denominators, then makes the integer vector primitive.
inline IntVec primitive_integer(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) {
    Int d = denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  return primitive(w);
}

inline std::string to_string(const Int& x) { return x.str(); }

/// Canonical "p/q" rendering; integral values print without the "/q".
inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

inline Rat parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw invalid_input_error("empty rational literal");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    if (den == 0) throw invalid_input_error("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    throw invalid_input_error("bad rational literal: " + s);
  }
}

/// Conversion used at serialization boundaries; anything that does not
/// fit 64 bits is an error rather than a silent wrap.
inline std::int64_t to_int64(const Int& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max())
    throw invalid_input_error("integer too large for 64-bit output: " + x.str());
  return static_cast<std::int64_t>(x);
}

}  // namespace newtoric
