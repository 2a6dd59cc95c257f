#include "stabcert/sos.hpp"

#include <algorithm>
#include <set>

#include "stabcert/linalg.hpp"

namespace stabcert::sos {

std::vector<Exponents> monomials_up_to(unsigned nvars, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  // Depth-first enumeration; canonical (graded lex) sort afterwards.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned used) {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e + used <= d; ++e) {
      cur[var] = e;
      rec(var + 1, used + e);
    }
    cur[var] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<Polynomial> closure_e(const ConstraintSet& a, unsigned d,
                                  std::size_t cap) {
  std::set<Polynomial> seen;
  for (const Polynomial& p : a.equalities) {
    if (p.is_zero()) continue;
    unsigned dp = p.degree();
    if (dp > d) continue;
    for (const Exponents& m : monomials_up_to(a.nvars, d - dp)) {
      Polynomial prod = p * Polynomial::monomial(a.nvars, m, Rat(1));
      seen.insert(prod);
      if (seen.size() > cap) throw ResourceError("equality closure too large");
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Polynomial> closure_g(const ConstraintSet& a, unsigned d,
                                  std::size_t cap) {
  std::set<Polynomial> seen;
  seen.insert(Polynomial::constant(a.nvars, Rat(1)));
  // Enumerate exponent tuples with sum of a_i * deg(q_i) <= d.
  std::vector<unsigned> degs;
  std::vector<Polynomial> qs;
  for (const Polynomial& q : a.inequalities) {
    if (q.is_zero()) continue;
    qs.push_back(q);
    degs.push_back(std::max(1u, q.degree()));
  }
  std::function<void(std::size_t, unsigned, const Polynomial&)> rec =
      [&](std::size_t idx, unsigned used, const Polynomial& acc) {
        if (idx == qs.size()) {
          seen.insert(acc);
          if (seen.size() > cap) throw ResourceError("inequality closure too large");
          return;
        }
        rec(idx + 1, used, acc);
        Polynomial cur = acc;
        for (unsigned e = 1; used + e * degs[idx] <= d; ++e) {
          cur = cur * qs[idx];
          rec(idx + 1, used + e * degs[idx], cur);
        }
      };
  rec(0, 0, Polynomial::constant(a.nvars, Rat(1)));
  return {seen.begin(), seen.end()};
}

Polynomial assemble_certificate(const ConstraintSet& a, const SosCertificate& cert) {
  auto ce = closure_e(a, cert.degree);
  auto cg = closure_g(a, cert.degree);
  Polynomial total(a.nvars);
  for (const auto& [idx, alpha] : cert.equality_terms) {
    if (idx >= ce.size()) throw DomainError("equality closure index out of range");
    total = total + ce[idx].scaled(alpha);
  }
  for (const auto& [idx, squares] : cert.inequality_terms) {
    if (idx >= cg.size()) throw DomainError("inequality closure index out of range");
    Polynomial sos(a.nvars);
    for (const Polynomial& s : squares) sos = sos + s * s;
    total = total + sos * cg[idx];
  }
  return total;
}

VerifyResult verify_certificate(const Polynomial& h, const ConstraintSet& a,
                                const SosCertificate& cert) {
  VerifyResult res;
  auto ce = closure_e(a, cert.degree);
  auto cg = closure_g(a, cert.degree);
  for (const auto& [idx, alpha] : cert.equality_terms) {
    (void)alpha;
    if (idx >= ce.size()) {
      res.reason = "equality closure index out of range";
      return res;
    }
    if (ce[idx].degree() > cert.degree) {
      res.reason = "equality term exceeds certificate degree";
      return res;
    }
  }
  for (const auto& [idx, squares] : cert.inequality_terms) {
    if (idx >= cg.size()) {
      res.reason = "inequality closure index out of range";
      return res;
    }
    unsigned dq = cg[idx].degree();
    for (const Polynomial& s : squares) {
      if (2 * s.degree() + dq > cert.degree) {
        res.reason = "multiplier degree bound violated";
        return res;
      }
    }
  }
  Polynomial total = assemble_certificate(a, cert);
  res.residual = h - total;
  res.valid = res.residual.is_zero();
  if (!res.valid && res.reason.empty()) res.reason = "nonzero residual";
  return res;
}

VerifyResult verify_refutation(const ConstraintSet& a, const SosCertificate& cert) {
  return verify_certificate(Polynomial::constant(a.nvars, Rat(-1)), a, cert);
}

Rat PseudoExpectation::apply(const Polynomial& p) const {
  Rat total = 0;
  for (const auto& [e, c] : p.terms()) {
    auto it = moments.find(e);
    if (it == moments.end()) throw DomainError("missing moment in table");
    total += c * it->second;
  }
  return total;
}

PeCheckReport check_pseudo_expectation(const PseudoExpectation& pe,
                                       const ConstraintSet& a) {
  PeCheckReport rep;
  const unsigned d = pe.degree;
  {
    auto one = pe.moments.find(Exponents(pe.nvars, 0));
    if (one == pe.moments.end() || one->second != 1)
      throw DomainError("pseudo-expectation must have E~(1) = 1");
  }
  rep.equalities_ok = true;
  for (const Polynomial& h : closure_e(a, d)) {
    double v = to_double(pe.apply(h));
    rep.worst_equality = std::max(rep.worst_equality, std::fabs(v));
    if (std::fabs(v) > 1e-10) rep.equalities_ok = false;
  }
  rep.cone_ok = true;
  rep.min_eigenvalue = 0.0;
  for (const Polynomial& h : closure_g(a, d)) {
    unsigned dh = h.degree();
    if (dh > d) continue;
    auto basis = monomials_up_to(pe.nvars, (d - dh) / 2);
    // Keep only u with deg(u*u*h) <= d.
    std::vector<Exponents> use;
    for (const auto& u : basis)
      if (2 * total_degree(u) + dh <= d) use.push_back(u);
    if (use.empty()) continue;
    Mat m(use.size(), use.size());
    for (std::size_t i = 0; i < use.size(); ++i) {
      for (std::size_t j = i; j < use.size(); ++j) {
        Exponents uv = use[i];
        for (unsigned k = 0; k < pe.nvars; ++k) uv[k] += use[j][k];
        Polynomial prod = h * Polynomial::monomial(pe.nvars, uv, Rat(1));
        double v = to_double(pe.apply(prod));
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    double min_eig = min_eigenvalue_sym(m);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, min_eig);
    if (min_eig < -1e-8 * (1.0 + std::fabs(m.trace()))) rep.cone_ok = false;
  }
  rep.ok = rep.equalities_ok && rep.cone_ok;
  return rep;
}

PseudoExpectation cube_uniform_moments(unsigned nvars, unsigned degree) {
  PseudoExpectation pe;
  pe.nvars = nvars;
  pe.degree = degree;
  for (const Exponents& e : monomials_up_to(nvars, degree)) {
    // E prod x_i^{e_i} over uniform {-1,1}^n: 1 if all exponents even else 0.
    bool all_even = true;
    for (unsigned x : e)
      if (x % 2 == 1) all_even = false;
    pe.moments.emplace(e, all_even ? Rat(1) : Rat(0));
  }
  return pe;
}

PseudoExpectation point_mass_moments(std::span<const Rat> point, unsigned degree) {
  PseudoExpectation pe;
  pe.nvars = static_cast<unsigned>(point.size());
  pe.degree = degree;
  for (const Exponents& e : monomials_up_to(pe.nvars, degree)) {
    Rat v = 1;
    for (unsigned i = 0; i < pe.nvars; ++i)
      if (e[i] > 0) v *= rat_pow(point[i], e[i]);
    pe.moments.emplace(e, v);
  }
  return pe;
}

}  // namespace stabcert::sos
