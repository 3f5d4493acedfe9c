#include "bicomm/factor.hpp"

#include <algorithm>
#include <random>

namespace bicomm {

Poly Factorization::expand() const {
  Poly acc = Poly::constant(unit);
  for (const auto& fp : factors) acc *= fp.prime.pow(fp.multiplicity);
  return acc;
}

namespace {

void sort_parts(std::vector<FactorPower>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const FactorPower& a, const FactorPower& b) { return poly_less(a.prime, b.prime); });
}

// Yun's algorithm; valid in characteristic zero.
std::vector<FactorPower> squarefree_char0(const Poly& f) {
  std::vector<FactorPower> out;
  Poly df = f.derivative();
  Poly a0 = poly_gcd(f, df);
  Poly b = f / a0;
  Poly c = df / a0;
  Poly d = c - b.derivative();
  for (std::size_t i = 1; !b.is_constant(); ++i) {
    Poly a = poly_gcd(b, d);
    if (!a.is_constant()) out.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

Poly pth_root(const Poly& f) {
  const std::size_t p = f.spec().prime();
  std::vector<FieldElement> r;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) r.push_back(f.coeffs()[k]);
  return Poly(f.spec(), std::move(r));
}

std::vector<FactorPower> squarefree_charp(const Poly& f) {
  std::vector<FactorPower> out;
  const std::size_t p = f.spec().prime();
  Poly c = poly_gcd(f, f.derivative());
  Poly w = f / c;
  for (std::size_t i = 1; !w.is_constant(); ++i) {
    Poly y = poly_gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_constant()) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
  }
  if (!c.is_constant()) {
    for (auto& [g, m] : squarefree_charp(pth_root(c).monic())) out.push_back({g, m * p});
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial over F_p:
// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const FieldSpec spec = f.spec();
  const Poly t = Poly::t(spec);
  const mpz_class p = spec.prime();
  Poly h = t % f;
  std::size_t d = 0;
  while (*f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, p, f);
    Poly g = poly_gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (*f.degree() > 0) out.emplace_back(f, *f.degree());
  return out;
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const FieldSpec spec = g.spec();
  const std::uint64_t p = spec.prime();
  mpz_class exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
  }
  while (true) {
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs.push_back(FieldElement::from_int(static_cast<long long>(rng() % p), spec));
    }
    Poly a(spec, std::move(coeffs));
    if (a.is_constant()) continue;
    Poly b(spec);
    if (p == 2) {
      Poly cur = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        cur = cur * cur % g;
        b += cur;
      }
    } else {
      b = powmod(a, exponent, g) - Poly::one(spec);
    }
    Poly split = poly_gcd(b, g);
    if (split.is_zero() || split.is_constant() || *split.degree() == n) continue;
    equal_degree(split, d, rng, out);
    equal_degree(g / split, d, rng, out);
    return;
  }
}

std::vector<Poly> factor_squarefree_fp(const Poly& f) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ *f.degree());
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials for Hensel lifting and recombination.

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  z_trim(a);
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return z_mod(std::move(r), m);
}

ZPoly z_add(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return z_mod(std::move(a), m);
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return z_mod(std::move(a), m);
}

// Division by a monic h modulo m.
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly a, const ZPoly& h, const mpz_class& m) {
  a = z_mod(std::move(a), m);
  if (a.size() < h.size()) return {{}, a};
  ZPoly q(a.size() - h.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = a[k + h.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[k] = c;
    for (std::size_t j = 0; j < h.size(); ++j) a[k + j] -= c * h[j];
  }
  a.resize(h.size() - 1);
  return {z_mod(std::move(q), m), z_mod(std::move(a), m)};
}

Poly z_to_fp(const ZPoly& a, FieldSpec spec) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(FieldElement::from_mpz(v, spec));
  return Poly(spec, std::move(c));
}

ZPoly fp_to_z(const Poly& a) {
  ZPoly r;
  for (const auto& c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  return r;
}

struct HenselPair {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = gh, sg + th = 1 mod m  ->  mod m^2, h monic.
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZPoly e = z_sub(f, z_mul(in.g, in.h, m2), m2);
  auto [q, r] = z_divmod_monic(z_mul(in.s, e, m2), in.h, m2);
  HenselPair out;
  out.g = z_add(z_add(in.g, z_mul(in.t, e, m2), m2), z_mul(q, in.g, m2), m2);
  out.h = z_add(in.h, r, m2);
  ZPoly b = z_add(z_mul(in.s, out.g, m2), z_mul(in.t, out.h, m2), m2);
  b = z_sub(b, ZPoly{1}, m2);
  auto [c, d] = z_divmod_monic(z_mul(in.s, b, m2), out.h, m2);
  out.s = z_sub(in.s, d, m2);
  out.t = z_sub(z_sub(in.t, z_mul(in.t, b, m2), m2), z_mul(c, out.g, m2), m2);
  return out;
}

// Lifts f = lc * prod(factors) mod p to mod `modulus` (a power p^(2^k)).
// Appends the lifted monic factors.
void multifactor_lift(const ZPoly& f, const std::vector<Poly>& factors, FieldSpec fp,
                      const mpz_class& modulus, std::vector<ZPoly>& out) {
  const mpz_class p = fp.prime();
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly h = f;
    for (auto& c : h) c *= inv;
    out.push_back(z_mod(std::move(h), modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  Poly g0 = Poly::constant(FieldElement::from_mpz(f.back(), fp));
  for (const auto& q : left) g0 *= q;
  Poly h0 = Poly::one(fp);
  for (const auto& q : right) h0 *= q;
  ExtGcd eg = poly_ext_gcd(g0, h0);
  HenselPair pair{fp_to_z(g0), fp_to_z(h0), fp_to_z(eg.s), fp_to_z(eg.t)};
  for (mpz_class m = p; m < modulus; m *= m) pair = hensel_step(f, pair, m);
  multifactor_lift(pair.g, left, fp, modulus, out);
  multifactor_lift(pair.h, right, fp, modulus, out);
}

ZPoly symmetric(ZPoly a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  z_trim(a);
  return a;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

Poly z_to_q(const ZPoly& a) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(FieldElement::from_mpz(v, FieldSpec::rationals()));
  return Poly(FieldSpec::rationals(), std::move(c));
}

ZPoly q_to_primitive_z(const Poly& a) {
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly r;
  for (const auto& c : a.coeffs()) {
    mpq_class v = c.rational() * den;
    r.push_back(v.get_num());
  }
  return primitive_part(std::move(r));
}

bool is_squarefree_mod(const ZPoly& f, FieldSpec fp) {
  Poly g = z_to_fp(f, fp);
  return poly_gcd(g, g.derivative()).is_one();
}

// Zassenhaus factorization of a primitive squarefree integer polynomial with
// positive leading coefficient and degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;

  // Pick, among a few admissible primes, the one giving the fewest modular factors.
  FieldSpec best;
  std::vector<Poly> best_factors;
  int admissible = 0;
  for (std::uint64_t p = 3; admissible < 4; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    FieldSpec fp = FieldSpec::prime_field(p);
    if (!is_squarefree_mod(f, fp)) continue;
    ++admissible;
    auto factors = factor_squarefree_fp(z_to_fp(f, fp).monic());
    if (best_factors.empty() || factors.size() < best_factors.size()) {
      best = fp;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {f};
  std::sort(best_factors.begin(), best_factors.end(), poly_less);

  // Any factor of lc*f has coefficients below |lc| * 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  bound *= abs(f.back());
  mpz_class modulus = best.prime();
  while (modulus <= bound) modulus *= modulus;

  std::vector<ZPoly> lifted;
  multifactor_lift(f, best_factors, best, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly g{rest.back()};
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pick[i]) g = z_mul(g, pool[i], modulus);
      }
      g = symmetric(std::move(g), modulus);
      if (g.empty() || rest[0] == 0 || g[0] == 0 ||
          mpz_divisible_p(mpz_class(rest[0] * rest.back()).get_mpz_t(), g[0].get_mpz_t())) {
        ZPoly cand = primitive_part(g);
        DivMod dm = divmod(z_to_q(rest), z_to_q(cand));
        if (dm.remainder.is_zero()) {
          result.push_back(cand);
          rest = q_to_primitive_z(dm.quotient);
          std::vector<ZPoly> kept;
          for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!pick[i]) kept.push_back(pool[i]);
          }
          pool = std::move(kept);
          found = true;
          break;
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

Factorization factor_over_fp(const Poly& f) {
  Factorization out{f.leading(), {}};
  for (const auto& [part, mult] : poly_squarefree(f)) {
    for (auto& prime : factor_squarefree_fp(part)) out.factors.push_back({prime.monic(), mult});
  }
  sort_parts(out.factors);
  return out;
}

Factorization factor_over_q(const Poly& f) {
  if (*f.degree() > kMaxRationalFactorDegree) {
    throw Error(Errc::DegreeTooLarge, "degree " + std::to_string(*f.degree()) +
                                          " exceeds the rational factorization bound " +
                                          std::to_string(kMaxRationalFactorDegree));
  }
  Factorization out{f.leading(), {}};
  for (const auto& [part, mult] : poly_squarefree(f)) {
    if (*part.degree() == 1) {
      out.factors.push_back({part, mult});
      continue;
    }
    for (const auto& z : zassenhaus(q_to_primitive_z(part))) {
      out.factors.push_back({z_to_q(z).monic(), mult});
    }
  }
  sort_parts(out.factors);
  return out;
}

}  // namespace

std::vector<FactorPower> poly_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "squarefree decomposition of zero");
  Poly m = f.monic();
  auto parts = f.spec().is_rationals() ? squarefree_char0(m) : squarefree_charp(m);
  for (auto& part : parts) part.prime = part.prime.monic();
  sort_parts(parts);
  return parts;
}

Factorization poly_factor(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "factorization of zero");
  if (f.is_constant()) return {f.leading(), {}};
  return f.spec().is_rationals() ? factor_over_q(f) : factor_over_fp(f);
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  Factorization fac = poly_factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace bicomm
