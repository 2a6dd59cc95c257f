#pragma once

#include <array>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

// Lagrange decomposition n = a^2 + b^2 + c^2 + d^2 for n >= 0.
// Randomized (Rabin-Shallit style) with a deterministic small-n fallback.
std::array<Int, 4> four_squares(const Int& n);

// Nonnegative rational as a sum of at most four rational squares;
// returns the square roots (nonzero entries only).
std::vector<Rat> rational_square_decomposition(const Rat& c);

// a^2 + b^2 = p for prime p with p % 4 == 1 (Cornacchia via Gaussian descent).
bool two_squares_prime(const Int& p, Int& a, Int& b);

}  // namespace stabcert
