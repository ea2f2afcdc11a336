#include "dioph/field.hpp"

#include <cstdlib>
#include <sstream>

#include "dioph/error.hpp"

namespace dioph {

bool is_squarefree(long n) {
  unsigned long m = static_cast<unsigned long>(std::labs(n));
  if (m == 0) return false;
  for (unsigned long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
    if (m % d == 0) m /= d;
  }
  return true;
}

FieldSpec FieldSpec::quadratic(long n, long bound) {
  if (n == 0 || n == 1) throw Error(Errc::InvalidField, "radicand must not be 0 or 1");
  if (std::labs(n) > bound)
    throw Error(Errc::InvalidField, "radicand " + std::to_string(n) + " exceeds bound");
  if (!is_squarefree(n))
    throw Error(Errc::InvalidField, "radicand " + std::to_string(n) + " is not squarefree");
  return FieldSpec(n);
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "Q(sqrt(" + std::to_string(n_) + "))";
}

FieldElem::FieldElem(mpq_class p, FieldSpec spec) : p_(std::move(p)), spec_(spec) {
  p_.canonicalize();
}

FieldElem::FieldElem(mpq_class p, mpq_class q, FieldSpec spec)
    : p_(std::move(p)), q_(std::move(q)), spec_(spec) {
  p_.canonicalize();
  q_.canonicalize();
  if (spec_.is_rational() && sgn(q_) != 0)
    throw Error(Errc::MixedFields, "irrational part in a rational element");
}

bool FieldElem::is_integral() const {
  return p_.get_den() == 1 && q_.get_den() == 1;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!(spec_ == o.spec_))
    throw Error(Errc::MixedFields, spec_.name() + " vs " + o.spec_.name());
}

FieldElem FieldElem::conj() const {
  FieldElem r(*this);
  r.q_ = -r.q_;
  return r;
}

mpq_class FieldElem::norm() const {
  mpq_class r = p_ * p_ - mpq_class(spec_.radicand()) * q_ * q_;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  mpq_class nm = norm();
  FieldElem r(*this);
  r.p_ = p_ / nm;
  r.q_ = -q_ / nm;
  return r;
}

FieldElem FieldElem::promoted(const FieldSpec& target) const {
  if (spec_ == target) return *this;
  if (!spec_.is_rational())
    throw Error(Errc::MixedFields, "cannot move " + spec_.name() + " into " + target.name());
  FieldElem r(*this);
  r.spec_ = target;
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  if (spec_.is_rational()) {
    p_ *= o.p_;
    return *this;
  }
  mpq_class np = p_ * o.p_ + mpq_class(spec_.radicand()) * q_ * o.q_;
  mpq_class nq = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(np);
  q_ = std::move(nq);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (o.in_base_field()) {
    p_ /= o.p_;
    q_ /= o.p_;
    return *this;
  }
  return *this *= o.inverse();
}

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpq_class r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

namespace {

// Picks the canonical one of {y, -y}.
FieldElem canonical_root(FieldElem y) {
  if (y.spec().real_embeddable()) {
    if (embed_sign(y) == Sign::Negative) y = -y;
    return y;
  }
  int sp = sgn(y.rational_part());
  if (sp < 0 || (sp == 0 && sgn(y.radical_part()) < 0)) y = -y;
  return y;
}

}  // namespace

std::optional<FieldElem> field_sqrt(const FieldElem& x) {
  const FieldSpec& spec = x.spec();
  if (x.is_zero()) return x;
  if (spec.is_rational()) {
    auto r = rational_sqrt(x.rational_part());
    if (!r) return std::nullopt;
    return FieldElem(*r, spec);
  }
  const mpq_class& p = x.rational_part();
  const mpq_class& q = x.radical_part();
  const mpq_class n(spec.radicand());
  // (u + v sqrt(n))^2 = (u^2 + n v^2) + 2uv sqrt(n).
  if (sgn(q) == 0) {
    if (auto u = rational_sqrt(p)) return canonical_root(FieldElem(*u, 0, spec));
    if (auto v = rational_sqrt(p / n)) return canonical_root(FieldElem(0, *v, spec));
    return std::nullopt;
  }
  auto m = rational_sqrt(x.norm());
  if (!m) return std::nullopt;
  for (int branch : {1, -1}) {
    mpq_class u2 = (p + branch * *m) / 2;
    auto u = rational_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    mpq_class v = q / (2 * *u);
    FieldElem y(*u, v, spec);
    if (y * y == x) return canonical_root(y);
  }
  return std::nullopt;
}

Sign embed_sign(const FieldElem& x) {
  const FieldSpec& spec = x.spec();
  if (!spec.real_embeddable())
    throw Error(Errc::NotRealEmbeddable, "no real embedding for " + spec.name());
  int sp = sgn(x.rational_part());
  int sq = sgn(x.radical_part());
  auto as_sign = [](int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); };
  if (sq == 0) return as_sign(sp);
  if (sp == 0 || sp == sq) return as_sign(sq);
  // Opposite signs: compare p^2 against n q^2; they cannot be equal as n is not a square.
  mpq_class lhs = x.rational_part() * x.rational_part();
  mpq_class rhs = mpq_class(spec.radicand()) * x.radical_part() * x.radical_part();
  return lhs > rhs ? as_sign(sp) : as_sign(sq);
}

namespace {

std::string rat_str(const mpq_class& v) { return v.get_str(); }

}  // namespace

std::string to_string(const FieldElem& x) {
  const mpq_class& p = x.rational_part();
  const mpq_class& q = x.radical_part();
  if (sgn(q) == 0) return rat_str(p);
  std::string gen = "sqrt(" + std::to_string(x.spec().radicand()) + ")";
  std::string rad;
  if (q == 1) {
    rad = gen;
  } else if (q == -1) {
    rad = "-" + gen;
  } else {
    rad = rat_str(q) + "*" + gen;
  }
  if (sgn(p) == 0) return rad;
  std::string out = rat_str(p);
  if (sgn(q) > 0) out += "+";
  return out + rad;
}

}  // namespace dioph
