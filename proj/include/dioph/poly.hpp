#ifndef DIOPH_POLY_HPP
#define DIOPH_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dioph/field.hpp"

namespace dioph {

/// Degree of a polynomial; the zero polynomial has no integer degree (-infinity).
using Degree = std::optional<int>;

/// Dense univariate polynomial in X over a FieldSpec. Index i holds the
/// coefficient of X^i; the top stored coefficient is never zero.
class Poly {
 public:
  Poly() : spec_(FieldSpec::rational()) {}
  explicit Poly(FieldSpec spec) : spec_(spec) {}
  Poly(std::vector<FieldElem> coeffs, FieldSpec spec);
  Poly(const FieldElem& constant);  // NOLINT: a constant is a polynomial

  static Poly x(FieldSpec spec = FieldSpec::rational());
  static Poly monomial(const FieldElem& c, int power);
  /// Rational coefficients listed from X^0 upwards.
  static Poly from_rationals(const std::vector<mpq_class>& coeffs,
                             FieldSpec spec = FieldSpec::rational());

  const FieldSpec& spec() const noexcept { return spec_; }
  Degree degree() const;
  /// Integer degree; throws InvalidTuple for the zero polynomial.
  int deg() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_integral() const;
  std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(std::size_t power) const;
  const FieldElem& lead() const;

  Poly promoted(const FieldSpec& target) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElem& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElem& c) { return a *= c; }
  friend Poly operator*(const FieldElem& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  void check_same(const Poly& o) const;

  std::vector<FieldElem> coeffs_;
  FieldSpec spec_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& f, const Poly& g, PolyOp op);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// f = quotient * g + remainder with deg(remainder) < deg(g). Throws DivisionByZero for g = 0.
DivRem poly_divrem(const Poly& f, const Poly& g);
/// True iff g divides f exactly.
bool divides(const Poly& g, const Poly& f);
/// f / g, throwing PreconditionFailed when the division leaves a remainder.
Poly exact_quotient(const Poly& f, const Poly& g);

enum class Ordering { Less, Equal, Greater };

/// f < g iff g - f has a positive leading coefficient under the real embedding.
Ordering poly_order(const Poly& f, const Poly& g);
Sign lead_sign(const Poly& f);
bool poly_less(const Poly& f, const Poly& g);

/// Square root over the coefficient field, or nullopt when f is not a perfect square.
std::optional<Poly> poly_sqrt(const Poly& f);

Poly poly_abs(const Poly& f);

Poly power(const Poly& f, unsigned e);

/// Canonical text: decreasing powers, explicit '*', e.g. "16*X^3 - 4*X".
std::string render(const Poly& f);

}  // namespace dioph

#endif  // DIOPH_POLY_HPP
