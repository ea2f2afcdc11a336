#ifndef DIOPH_FIELD_HPP
#define DIOPH_FIELD_HPP

// Exact arithmetic in Q and in quadratic fields Q(sqrt(n)).

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dioph {

inline constexpr long kDefaultRadicandBound = 1'000'000;

/// The coefficient field: Q, or Q(sqrt(n)) for a squarefree n not in {0, 1}.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  /// Throws InvalidField unless n is squarefree, n != 0, 1 and |n| <= bound.
  static FieldSpec quadratic(long n, long bound = kDefaultRadicandBound);

  bool is_rational() const noexcept { return n_ == 0; }
  bool is_quadratic() const noexcept { return n_ != 0; }
  /// 0 for Q.
  long radicand() const noexcept { return n_; }
  bool real_embeddable() const noexcept { return n_ >= 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(long n) : n_(n) {}
  long n_ = 0;
};

bool is_squarefree(long n);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// p + q*sqrt(n). q is always zero over Q.
class FieldElem {
 public:
  explicit FieldElem(FieldSpec spec = FieldSpec::rational()) : spec_(spec) {}
  FieldElem(mpq_class p, FieldSpec spec = FieldSpec::rational());
  FieldElem(mpq_class p, mpq_class q, FieldSpec spec);
  FieldElem(long p, FieldSpec spec = FieldSpec::rational()) : FieldElem(mpq_class(p), spec) {}

  const mpq_class& rational_part() const noexcept { return p_; }
  const mpq_class& radical_part() const noexcept { return q_; }
  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_one() const { return p_ == 1 && sgn(q_) == 0; }
  bool in_base_field() const { return sgn(q_) == 0; }
  bool is_integral() const;

  FieldElem conj() const;
  /// p^2 - n q^2.
  mpq_class norm() const;
  FieldElem inverse() const;
  /// Re-home a rational value in a larger field; throws MixedFields otherwise.
  FieldElem promoted(const FieldSpec& target) const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.spec_ == b.spec_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  void check_same(const FieldElem& o) const;

  mpq_class p_{0};
  mpq_class q_{0};
  FieldSpec spec_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// Square root within the field, or nullopt if x is not a square there.
/// The root is canonical: positive under the real embedding, or for n < 0
/// the one with p > 0 (or p = 0, q > 0).
std::optional<FieldElem> field_sqrt(const FieldElem& x);

/// Exact sign of p + q*sqrt(n) as a real number. Throws NotRealEmbeddable for n < 0.
Sign embed_sign(const FieldElem& x);

std::optional<mpq_class> rational_sqrt(const mpq_class& x);

/// Text form used by the polynomial renderer, e.g. "3/2", "-sqrt(5)", "2+3*sqrt(5)".
std::string to_string(const FieldElem& x);

}  // namespace dioph

#endif  // DIOPH_FIELD_HPP
