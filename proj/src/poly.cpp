#include "dioph/poly.hpp"

#include <algorithm>

#include "dioph/error.hpp"

namespace dioph {

Poly::Poly(std::vector<FieldElem> coeffs, FieldSpec spec) : coeffs_(std::move(coeffs)), spec_(spec) {
  for (const auto& c : coeffs_)
    if (!(c.spec() == spec_)) throw Error(Errc::MixedFields, "coefficient outside " + spec_.name());
  normalize();
}

Poly::Poly(const FieldElem& constant) : spec_(constant.spec()) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::x(FieldSpec spec) { return monomial(FieldElem(1, spec), 1); }

Poly Poly::monomial(const FieldElem& c, int power) {
  Poly p(c.spec());
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(power) + 1, FieldElem(c.spec()));
  p.coeffs_.back() = c;
  return p;
}

Poly Poly::from_rationals(const std::vector<mpq_class>& coeffs, FieldSpec spec) {
  std::vector<FieldElem> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.emplace_back(c, spec);
  return Poly(std::move(cs), spec);
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!(spec_ == o.spec_)) throw Error(Errc::MixedFields, spec_.name() + " vs " + o.spec_.name());
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

int Poly::deg() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidTuple, "degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElem& c) { return c.is_integral(); });
}

FieldElem Poly::coeff(std::size_t power) const {
  if (power >= coeffs_.size()) return FieldElem(spec_);
  return coeffs_[power];
}

const FieldElem& Poly::lead() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidTuple, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::promoted(const FieldSpec& target) const {
  if (spec_ == target) return *this;
  Poly r(target);
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.promoted(target));
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElem(spec_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElem(spec_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.spec_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElem& c) {
  if (!(c.spec() == spec_)) throw Error(Errc::MixedFields, c.spec().name() + " vs " + spec_.name());
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Poly poly_arith(const Poly& f, const Poly& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  return f;
}

DivRem poly_divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (!(f.spec() == g.spec())) throw Error(Errc::MixedFields, f.spec().name() + " vs " + g.spec().name());
  const FieldSpec spec = f.spec();
  const int dg = g.deg();
  if (f.is_zero() || f.deg() < dg) return {Poly(spec), f};
  const FieldElem inv = g.lead().inverse();
  std::vector<FieldElem> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElem> quot(static_cast<std::size_t>(f.deg() - dg) + 1, FieldElem(spec));
  auto gc = g.coeffs();
  for (int k = f.deg() - dg; k >= 0; --k) {
    const FieldElem& top = rem[static_cast<std::size_t>(k + dg)];
    if (top.is_zero()) continue;
    FieldElem q = top * inv;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= q * gc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dg), FieldElem(spec));
  return {Poly(std::move(quot), spec), Poly(std::move(rem), spec)};
}

bool divides(const Poly& g, const Poly& f) { return poly_divrem(f, g).remainder.is_zero(); }

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto qr = poly_divrem(f, g);
  if (!qr.remainder.is_zero())
    throw Error(Errc::PreconditionFailed, render(g) + " does not divide " + render(f));
  return std::move(qr.quotient);
}

Sign lead_sign(const Poly& f) {
  if (f.is_zero()) {
    if (!f.spec().real_embeddable())
      throw Error(Errc::NotRealEmbeddable, "no real embedding for " + f.spec().name());
    return Sign::Zero;
  }
  return embed_sign(f.lead());
}

Ordering poly_order(const Poly& f, const Poly& g) {
  switch (lead_sign(g - f)) {
    case Sign::Positive: return Ordering::Less;
    case Sign::Zero: return Ordering::Equal;
    case Sign::Negative: return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool poly_less(const Poly& f, const Poly& g) { return poly_order(f, g) == Ordering::Less; }

std::optional<Poly> poly_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  const int d = f.deg();
  if (d % 2 != 0) return std::nullopt;
  auto top = field_sqrt(f.lead());
  if (!top) return std::nullopt;
  const int k = d / 2;
  const FieldSpec spec = f.spec();
  std::vector<FieldElem> g(static_cast<std::size_t>(k) + 1, FieldElem(spec));
  g[static_cast<std::size_t>(k)] = *top;
  const FieldElem inv2 = (FieldElem(2, spec) * *top).inverse();
  // Coefficient of X^(k+i) in g^2 is 2 g_k g_i + sum over i < j, l < k with j + l = k + i.
  for (int i = k - 1; i >= 0; --i) {
    FieldElem acc = f.coeff(static_cast<std::size_t>(k + i));
    for (int j = i + 1; j < k; ++j) {
      int l = k + i - j;
      if (l <= i || l >= k) continue;
      acc -= g[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(l)];
    }
    g[static_cast<std::size_t>(i)] = acc * inv2;
  }
  Poly root(std::move(g), spec);
  if (!(root * root == f)) return std::nullopt;
  return root;
}

Poly poly_abs(const Poly& f) { return lead_sign(f) == Sign::Negative ? -f : f; }

Poly power(const Poly& f, unsigned e) {
  Poly r(FieldElem(1, f.spec()));
  Poly base = f;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

namespace {

bool simple_negative(const FieldElem& c) {
  int sp = sgn(c.rational_part());
  int sq = sgn(c.radical_part());
  if (sq == 0) return sp < 0;
  if (sp == 0) return sq < 0;
  return false;
}

}  // namespace

std::string render(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto cs = f.coeffs();
  bool first = true;
  for (int k = f.deg(); k >= 0; --k) {
    const FieldElem& c = cs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool neg = simple_negative(c);
    const FieldElem mag = neg ? -c : c;
    std::string magstr;
    if (!(mag.is_one() && k > 0)) {
      magstr = to_string(mag);
      if (sgn(mag.rational_part()) != 0 && sgn(mag.radical_part()) != 0) magstr = "(" + magstr + ")";
    }
    std::string body;
    if (k == 0) {
      body = magstr;
    } else {
      body = magstr.empty() ? "" : magstr + "*";
      body += k == 1 ? "X" : "X^" + std::to_string(k);
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace dioph
