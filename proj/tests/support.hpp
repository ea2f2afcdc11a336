#ifndef DIOPH_TESTS_SUPPORT_HPP
#define DIOPH_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "dioph/extend.hpp"
#include "dioph/parse.hpp"

namespace testing_support {

using dioph::FieldElem;
using dioph::FieldSpec;
using dioph::Poly;

inline Poly P(const char* text) { return dioph::parse_poly(text); }

inline std::vector<Poly> Ps(const std::vector<std::string>& texts) { return dioph::parse_polys(texts); }

// Oracle: p + q sqrt(n) kept as a bare pair, with its own arithmetic.
struct Quad {
  mpq_class p, q;
  friend bool operator==(const Quad& a, const Quad& b) { return a.p == b.p && a.q == b.q; }
};

inline Quad qadd(const Quad& a, const Quad& b) { return {a.p + b.p, a.q + b.q}; }
inline Quad qmul(const Quad& a, const Quad& b, long n) {
  return {a.p * b.p + n * a.q * b.q, a.p * b.q + a.q * b.p};
}

// Oracle polynomial: sparse map from exponent to coefficient.
struct MapPoly {
  long n = 0;
  std::map<int, Quad> terms;
};

inline MapPoly to_map(const Poly& f) {
  MapPoly out;
  out.n = f.spec().radicand();
  for (int i = 0; i < static_cast<int>(f.coeffs().size()); ++i) {
    const FieldElem& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) out.terms[i] = {c.rational_part(), c.radical_part()};
  }
  return out;
}

inline void prune(MapPoly& f) {
  for (auto it = f.terms.begin(); it != f.terms.end();)
    it = (it->second.p == 0 && it->second.q == 0) ? f.terms.erase(it) : std::next(it);
}

inline MapPoly map_add(const MapPoly& f, const MapPoly& g) {
  MapPoly out = f;
  for (const auto& [e, c] : g.terms) out.terms[e] = qadd(out.terms[e], c);
  prune(out);
  return out;
}

inline MapPoly map_mul(const MapPoly& f, const MapPoly& g) {
  MapPoly out;
  out.n = f.n;
  for (const auto& [e1, c1] : f.terms)
    for (const auto& [e2, c2] : g.terms) out.terms[e1 + e2] = qadd(out.terms[e1 + e2], qmul(c1, c2, f.n));
  prune(out);
  return out;
}

inline bool same(const MapPoly& f, const MapPoly& g) {
  if (f.terms.size() != g.terms.size()) return false;
  for (const auto& [e, c] : f.terms) {
    auto it = g.terms.find(e);
    if (it == g.terms.end() || !(it->second == c)) return false;
  }
  return true;
}

// Evaluation at a rational point, Horner over bare pairs.
inline Quad eval(const Poly& f, const mpq_class& x) {
  const long n = f.spec().radicand();
  Quad acc{0, 0};
  for (auto i = f.coeffs().size(); i-- > 0;) {
    acc = qmul(acc, {x, 0}, n);
    acc = qadd(acc, {f.coeffs()[i].rational_part(), f.coeffs()[i].radical_part()});
  }
  return acc;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  mpq_class rational(long bound) {
    mpq_class q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  FieldElem elem(long bound, const FieldSpec& spec) {
    if (spec.is_rational()) return FieldElem(rational(bound), spec);
    return FieldElem(rational(bound), rational(bound), spec);
  }

  // Exact degree `deg`, coefficients with numerators and denominators within `bound`.
  Poly poly(int deg, long bound, const FieldSpec& spec = FieldSpec::rational()) {
    std::vector<FieldElem> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(elem(bound, spec));
    while (cs.back().is_zero()) cs.back() = elem(bound, spec);
    return Poly(cs, spec);
  }

  // Possibly zero, degree at most `deg`.
  Poly any_poly(int deg, long bound, const FieldSpec& spec = FieldSpec::rational()) {
    std::vector<FieldElem> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(elem(bound, spec));
    return Poly(cs, spec);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// {a, b} with r = ak + e, b = k(ak + 2e): ab + 1 = r^2. Not both constant,
// distinct, positive leading coefficients, degrees <= maxDeg.
inline std::pair<Poly, Poly> random_d1_pair(Rng& rng, int maxDeg = 4, long bound = 20) {
  for (;;) {
    const int da = static_cast<int>(rng.integer(0, maxDeg));
    const int dk = static_cast<int>(rng.integer(0, (maxDeg - da) / 2));
    Poly a = rng.poly(da, bound);
    const Poly k = rng.poly(dk, bound);
    const Poly e(FieldElem(rng.integer(0, 1) ? 1L : -1L, FieldSpec::rational()));
    Poly b = k * (a * k + Poly(FieldElem(2L, FieldSpec::rational())) * e);
    if (b.is_zero() || a == b || (a.is_constant() && b.is_constant())) continue;
    if (dioph::lead_sign(a) == dioph::Sign::Negative) {
      a = -a;
      b = -b;
    }
    if (dioph::lead_sign(b) == dioph::Sign::Negative) continue;
    if (dioph::poly_less(b, a)) std::swap(a, b);
    return {a, b};
  }
}

// A D(1)-triple with positive leading coefficients: {a, b, c+} or the
// irregular-looking {a, b, d+} of the pair's regular quadruple.
inline dioph::TripleData random_d1_triple(Rng& rng, int maxDeg = 4, long bound = 20) {
  const auto [a, b] = random_d1_pair(rng, maxDeg, bound);
  const dioph::DTuple quad = dioph::pair_regular_quadruple(a, b);
  std::vector<Poly> elems = {quad[0], quad[1], quad[2], quad[3]};
  elems.erase(elems.begin() + rng.integer(0, 3));
  return dioph::extend_triple(elems, 1);
}

}  // namespace testing_support

#endif  // DIOPH_TESTS_SUPPORT_HPP
