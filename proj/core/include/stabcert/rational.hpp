#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabcert {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" or "p"; throws on malformed input or q == 0.
Rat parse_rat(const std::string& s);

// Canonical "p/q" (or "p" when q == 1).
std::string rat_to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned long e);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// |r|^3 with exact sign handling.
inline Rat abs_cubed(const Rat& r) {
  Rat a = rat_abs(r);
  return a * a * a;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Exact rational equal to the double (doubles are dyadic rationals).
Rat rat_from_double(double x);

Int binomial(unsigned long n, unsigned long k);

// Counter-based RNG: a fixed (seed, counter) pair always yields the same
// value, independent of call order. splitmix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const;
  std::uint64_t next() { return at(counter_++); }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  // Uniform integer in [0, m).
  std::uint64_t next_below(std::uint64_t m) { return next() % m; }

  // Dyadic rational k/2^bits, k uniform in [0, 2^bits].
  Rat next_dyadic(unsigned bits);

  // Standard normal via Box-Muller.
  double next_gaussian();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stabcert
