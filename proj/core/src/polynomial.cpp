#include "stabcert/polynomial.hpp"

#include <sstream>

namespace stabcert::sos {

Polynomial Polynomial::constant(unsigned nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  Polynomial p(nvars);
  p.add_term(e, Rat(1));
  return p;
}

Polynomial Polynomial::monomial(unsigned nvars, Exponents e, const Rat& c) {
  if (e.size() != nvars) throw DomainError("exponent vector length mismatch");
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Rat Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw DomainError("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
  Polynomial r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (unsigned i = 0; i < nvars_; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(nvars_, Rat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Rat Polynomial::eval(std::span<const Rat> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point size mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= rat_pow(point[i], e[i]);
    total += t;
  }
  return total;
}

double Polynomial::eval_double(std::span<const double> point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(unsigned index, const Polynomial& repl) const {
  if (repl.nvars_ != nvars_) throw DomainError("substitution variable mismatch");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    unsigned k = rest[index];
    rest[index] = 0;
    Polynomial term = Polynomial::monomial(nvars_, rest, c);
    if (k > 0) term = term * repl.pow(k);
    r = r + term;
  }
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  auto it1 = terms_.begin(), it2 = o.terms_.begin();
  GradedLexLess less;
  for (; it1 != terms_.end() && it2 != o.terms_.end(); ++it1, ++it2) {
    if (less(it1->first, it2->first)) return true;
    if (less(it2->first, it1->first)) return false;
    if (it1->second != it2->second) return it1->second < it2->second;
  }
  return it1 == terms_.end() && it2 != o.terms_.end();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = rat_abs(c);
    bool printed_coeff = false;
    if (a != 1 || total_degree(e) == 0) {
      os << rat_to_string(a);
      printed_coeff = true;
    }
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed_coeff) os << "*";
      if (i < names.size()) os << names[i];
      else os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      printed_coeff = true;
    }
  }
  return os.str();
}

}  // namespace stabcert::sos
