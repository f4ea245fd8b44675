// Exact rational scalar type and canonical string form.
//
// Every quantity in the library is a Rat; doubles appear only at the
// numeric-evaluation boundary (quadrature oracle, --eval reports).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvert {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Error taxonomy shared by the whole library.  code() is stable and maps
// onto CLI exit codes.
enum class ErrKind {
  schema,
  non_rational,
  dimension_mismatch,
  unbounded,
  pole,
  empty,
  low_dimensional,
  direction_not_generic,
  degenerate,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& what) { throw Error(kind, what); }

inline void check(bool ok, ErrKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

// Canonical serialization: "p/q" with q > 0 and gcd(p, q) = 1, q printed
// even when it equals 1 so that keys are stable.
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional leading '-' on either part.  Anything
// else (decimals, exponents, whitespace) is rejected as non-rational.
Rat rat_from_string(const std::string& s);

inline int sign_of(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// ---- vectors of rationals ----

using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrKind::dimension_mismatch, "dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrKind::dimension_mismatch, "vec_add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrKind::dimension_mismatch, "vec_sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec vec_neg(const Vec& a) { return vec_scale(Rat(-1), a); }

inline bool is_zero_vec(const Vec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(size_t d) { return Vec(d, Rat(0)); }

inline Vec unit_vec(size_t d, size_t i) {
  Vec r(d, Rat(0));
  r[i] = 1;
  return r;
}

// Deterministic total order used for canonical sorting and map keys.
inline bool lex_less(const Vec& a, const Vec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

// Scales a nonzero rational vector to the unique integer vector with
// coprime entries and the same direction (positive multiple).
Vec primitive_direction(const Vec& v);

std::string vec_to_string(const Vec& v);

// FNV-1a over a canonical byte string; used for input digests in reports.
uint64_t fnv1a(const std::string& bytes);

}  // namespace polyvert
