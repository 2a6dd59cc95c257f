#include "stabcert/rational.hpp"

#include <cmath>

namespace stabcert {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw DomainError("malformed rational: " + s);
  }
  if (r.get_den() == 0) {
    throw DomainError("zero denominator: " + s);
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(den.get_mpz_t(), mpq_denref(base.get_mpq_t()), e);
  Rat out;
  mpq_set_num(out.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), den.get_mpz_t());
  out.canonicalize();
  return out;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double to rational");
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t CounterRng::at(std::uint64_t counter) const {
  std::uint64_t z = seed_ + counter * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rat CounterRng::next_dyadic(unsigned bits) {
  if (bits > 62) throw DomainError("dyadic bits too large");
  std::uint64_t den = 1ULL << bits;
  std::uint64_t num = next() % (den + 1);
  Rat r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = next_unit();
  } while (u1 <= 0.0);
  double u2 = next_unit();
  double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return mag * std::cos(2.0 * M_PI * u2);
}

}  // namespace stabcert
