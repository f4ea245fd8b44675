#include "polyvert/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace polyvert {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!valid_int_token(num) || !valid_int_token(den))
    fail(ErrKind::non_rational, "not a rational literal: \"" + s + "\"");
  Int p(num), q(den);
  if (q == 0) fail(ErrKind::non_rational, "zero denominator: \"" + s + "\"");
  return Rat(p, q);
}

Vec primitive_direction(const Vec& v) {
  if (is_zero_vec(v)) fail(ErrKind::degenerate, "primitive_direction: zero vector");
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, denominator(x));
  std::vector<Int> w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(w[i] / g);
  return r;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace polyvert
