#include "stabcert/numtheory.hpp"

namespace stabcert {

namespace {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

bool probab_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// z with z^2 = -1 (mod p), p prime, p % 4 == 1.
bool sqrt_minus_one(const Int& p, Int& z, CounterRng& rng) {
  Int exp = (p - 1) / 4;
  for (int tries = 0; tries < 200; ++tries) {
    Int u = Int(static_cast<unsigned long>(rng.next() % 0xFFFFFFFFul)) + 2;
    u %= p;
    if (u < 2) continue;
    mpz_powm(z.get_mpz_t(), u.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    Int check = (z * z) % p;
    if (check == p - 1) return true;
  }
  return false;
}

}  // namespace

bool two_squares_prime(const Int& p, Int& a, Int& b) {
  if (p == 2) {
    a = 1;
    b = 1;
    return true;
  }
  if (p % 4 != 1) return false;
  CounterRng rng(0xC0417A);
  Int z;
  if (!sqrt_minus_one(p, z, rng)) return false;
  // Euclidean descent: remainders of gcd(p, z) below sqrt(p) give the pair.
  Int r0 = p, r1 = z;
  Int bound = isqrt(p);
  while (r1 > bound) {
    Int r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  a = r1;
  Int rem = p - a * a;
  Int root;
  if (!is_perfect_square(rem, root)) return false;
  b = root;
  return true;
}

std::array<Int, 4> four_squares(const Int& n) {
  if (n < 0) throw DomainError("four_squares needs n >= 0");
  if (n == 0) return {Int(0), Int(0), Int(0), Int(0)};
  if (n == 1) return {Int(1), Int(0), Int(0), Int(0)};
  // Strip factors of four.
  if (n % 4 == 0) {
    auto inner = four_squares(n / 4);
    for (auto& v : inner) v *= 2;
    return inner;
  }
  Int root;
  if (is_perfect_square(n, root)) return {root, Int(0), Int(0), Int(0)};

  CounterRng rng(0x5EED5 + static_cast<std::uint64_t>(mpz_fdiv_ui(n.get_mpz_t(), 1000000007)));
  Int sq = isqrt(n);
  for (int attempt = 0; attempt < 60000; ++attempt) {
    // Random a in [0, sqrt(n)], biased toward the top for fewer leftovers.
    Int a;
    if (attempt == 0) {
      a = sq;
    } else {
      Int span = sq + 1;
      Int r(static_cast<unsigned long>(rng.next() >> 16));
      a = r % span;
    }
    Int m = n - a * a;
    if (m == 0) return {a, Int(0), Int(0), Int(0)};
    Int b_try;
    if (is_perfect_square(m, b_try)) return {a, b_try, Int(0), Int(0)};
    Int sqm = isqrt(m);
    for (int inner = 0; inner < 40; ++inner) {
      Int b;
      if (inner == 0) {
        b = sqm;
      } else {
        Int span = sqm + 1;
        Int r(static_cast<unsigned long>(rng.next() >> 16));
        b = r % span;
      }
      Int p = m - b * b;
      if (p == 0) return {a, b, Int(0), Int(0)};
      if (p == 1) return {a, b, Int(1), Int(0)};
      if (p == 2) return {a, b, Int(1), Int(1)};
      Int c;
      if (is_perfect_square(p, c)) return {a, b, c, Int(0)};
      if (p % 4 == 1 && probab_prime(p)) {
        Int x, y;
        if (two_squares_prime(p, x, y)) return {a, b, x, y};
      }
    }
  }
  throw DomainError("four_squares search failed");
}

std::vector<Rat> rational_square_decomposition(const Rat& c) {
  if (c < 0) throw DomainError("need a nonnegative rational");
  std::vector<Rat> roots;
  if (c == 0) return roots;
  Int num(c.get_num()), den(c.get_den());
  auto parts = four_squares(num * den);
  for (const Int& a : parts) {
    if (a == 0) continue;
    Rat r(a, den);
    r.canonicalize();
    roots.push_back(r);
  }
  return roots;
}

}  // namespace stabcert
