#include "dioph/extend.hpp"

#include "dioph/error.hpp"

namespace dioph {

namespace {

Poly scalar(const Poly& like, const mpq_class& v) { return Poly(FieldElem(v, like.spec())); }

bool field_has_sqrt(const FieldSpec& spec, long n) { return field_sqrt(FieldElem(n, spec)).has_value(); }

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::IdentityViolation, what);
}

}  // namespace

std::string to_string(TripleClass c) {
  switch (c) {
    case TripleClass::L4_1: return "L4-1";
    case TripleClass::L4_2a: return "L4-2a";
    case TripleClass::L4_2b: return "L4-2b";
    case TripleClass::L4_3a: return "L4-3a";
    case TripleClass::L4_3b: return "L4-3b";
    case TripleClass::L4_3c: return "L4-3c";
    case TripleClass::L4_3d: return "L4-3d";
    case TripleClass::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

PairExtension extend_pair(const Poly& a, const Poly& b, long n) {
  if (!(a.spec() == b.spec())) throw Error(Errc::MixedFields, a.spec().name() + " vs " + b.spec().name());
  const Poly np = constant_like(a, n);
  auto r = poly_sqrt(a * b + np);
  if (!r) throw Error(Errc::NotADPair, render(a) + ", " + render(b) + " with n = " + std::to_string(n));
  const Poly two_r = scalar(a, 2) * *r;
  PairExtension out{*r, a + b + two_r, a + b - two_r};
  for (int sign : {1, -1}) {
    const Poly& c = sign > 0 ? out.c_plus : out.c_minus;
    const Poly ar = sign > 0 ? a + *r : a - *r;
    const Poly br = sign > 0 ? b + *r : b - *r;
    require(a * c + np == ar * ar, "ac + n = (a +- r)^2");
    require(b * c + np == br * br, "bc + n = (b +- r)^2");
  }
  return out;
}

DTuple pair_regular_quadruple(const Poly& a, const Poly& b) {
  const PairExtension ext = extend_pair(a, b, 1);
  const Poly& r = ext.r;
  Poly d = scalar(a, 4) * r * (a + r) * (b + r);
  auto res = verify_tuple({a, b, ext.c_plus, d}, 1);
  require(res.report.ok, "pair extension is not a D(1)-quadruple");
  require(is_regular_quadruple(*res.tuple), "pair extension is not regular");
  return std::move(*res.tuple);
}

TripleData extend_triple(const DTuple& triple) {
  if (triple.size() != 3) throw Error(Errc::WrongArity, "expected a triple");
  const long n = triple.n();
  TripleData out{triple, triple[0], triple[1], triple[2], Poly(), Poly(), Poly(), 0, 0, 0, {}, {}, true};
  const Witnesses wit = triple_witnesses(triple);
  out.r = wit.r;
  out.s = wit.s;
  out.t = wit.t;
  out.alpha = out.a.deg();
  out.beta = out.b.deg();
  out.gamma = out.c.deg();

  const Poly& a = out.a;
  const Poly& b = out.b;
  const Poly& c = out.c;
  const Poly& r = out.r;
  const Poly& s = out.s;
  const Poly& t = out.t;
  const Poly np = constant_like(a, n);
  const Poly abc = a * b * c;
  const Poly rst = r * s * t;
  const Poly two_over_n = scalar(a, mpq_class(2, n));
  const Poly two = scalar(a, 2);
  const bool quadruple_expected = field_has_sqrt(a.spec(), n);

  for (int sign : {1, -1}) {
    RootExtension& ext = sign > 0 ? out.plus : out.minus;
    const Poly sg = scalar(a, sign);
    ext.d = a + b + c + two_over_n * (abc + sg * rst);
    ext.u = a * t + sg * r * s;
    ext.v = b * s + sg * r * t;
    ext.w = c * r + sg * s * t;
    const Poly& d = ext.d;
    require(np * (a * d + np) == ext.u * ext.u, "ad + n = u^2 / n");
    require(np * (b * d + np) == ext.v * ext.v, "bd + n = v^2 / n");
    require(np * (c * d + np) == ext.w * ext.w, "cd + n = w^2 / n");
    // c = a + b + d + (2/n)(abd -+ ruv/n) and c = a + b - d + (2/n) r w.
    require(np * np * c == np * np * (a + b + d) + two * np * a * b * d - sg * two * r * ext.u * ext.v,
            "c = a + b + d + 2(abd -+ ruv)");
    require(np * c == np * (a + b - d) + two * r * ext.w, "c = a + b - d + 2rw");

    ext.proper = !d.is_zero() && !(d == a) && !(d == b) && !(d == c);
    if (ext.proper) {
      auto res = verify_tuple({a, b, c, d}, n);
      if (res.report.ok) {
        require(is_regular_quadruple(*res.tuple), "{a, b, c, d} is not regular");
        ext.quadruple = std::move(res.tuple);
      } else {
        require(!quadruple_expected, "{a, b, c, d} fails to verify");
      }
    }
  }
  if (a.is_integral() && b.is_integral() && c.is_integral())
    out.integral_roots = out.plus.d.is_integral() && out.minus.d.is_integral();
  return out;
}

TripleData extend_triple(std::vector<Poly> elems, long n) {
  if (elems.size() != 3) throw Error(Errc::WrongArity, "expected three elements");
  auto res = verify_tuple(std::move(elems), n);
  if (!res.report.ok) throw Error(Errc::NotADTriple, "a pairwise product plus n is not a square");
  return extend_triple(*res.tuple);
}

bool Classification::checks_pass() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

Classification classify_triple(const TripleData& data) {
  if (data.n() != 1) throw Error(Errc::PreconditionFailed, "classification needs a D(1)-triple");
  if (!data.a.spec().real_embeddable()) throw Error(Errc::NotOrderable, data.a.spec().name());
  if (lead_sign(data.a) != Sign::Positive)
    throw Error(Errc::PreconditionFailed, "classification needs 0 < a < b < c");
  if (!poly_less(data.a, data.b) || !poly_less(data.b, data.c))
    throw Error(Errc::NotOrderable, "elements are not strictly increasing");

  const int al = data.alpha, be = data.beta, ga = data.gamma;
  const Poly& dm = data.d_minus();
  Classification out;
  auto check = [&](std::string name, bool ok) { out.checks.push_back({std::move(name), ok}); };
  const Poly two = Poly(FieldElem(2, data.a.spec()));

  if (dm.is_zero()) {
    out.labels = {TripleClass::L4_1};
    check("beta = gamma", be == ga);
    check("c = a + b + 2r", data.c == data.a + data.b + two * data.r);
    if (al < be) {
      check("C = B", data.c.lead() == data.b.lead());
    } else {
      check("C = A + B + 2 sqrt(AB)",
            data.c.lead() == data.a.lead() + data.b.lead() + FieldElem(2, data.a.spec()) * data.r.lead());
    }
  } else {
    out.d_minus_degree = dm.deg();
    const int dd = out.d_minus_degree;
    check("d- > 0", lead_sign(dm) == Sign::Positive);
    check("deg(d-) = gamma - alpha - beta", dd == ga - al - be);
    if (dd == 0) {
      if (dm == data.a) {
        out.labels = {TripleClass::L4_2a};
        check("alpha = 0", al == 0);
        check("beta = gamma", be == ga);
        check("c = b + 2rs", data.c == data.b + two * data.r * data.s);
      } else {
        out.labels = {TripleClass::L4_2b};
        check("alpha > 0", al > 0);
        check("gamma = alpha + beta", ga == al + be);
      }
    } else {
      if (dd <= al && al > 0 && al + be < ga && ga <= 2 * al + be) out.labels.push_back(TripleClass::L4_3a);
      if (al <= dd && dd <= be && 2 * al + be <= ga && ga <= al + 2 * be)
        out.labels.push_back(TripleClass::L4_3b);
      if (dd == al && al == be && ga == 3 * al) out.labels.push_back(TripleClass::L4_3c);
      if (be <= dd && dd < ga && ga >= al + 2 * be) out.labels.push_back(TripleClass::L4_3d);
      check("gamma > alpha + beta", ga > al + be);
      check("some degree window admits the triple", !out.labels.empty());
    }
  }
  out.primary = out.labels.empty() ? TripleClass::Unclassified : out.labels.front();
  return out;
}

mpq_class family_2a_first(const mpq_class& p) {
  if (sgn(p) <= 0 || p >= 1) throw Error(Errc::PreconditionFailed, "p must lie in (0, 1)");
  mpq_class a = (1 - p * p) / (2 * p);
  a.canonicalize();
  return a;
}

Poly family_2a_partner(const mpq_class& p, const Poly& root) {
  if (sgn(p) <= 0 || p >= 1) throw Error(Errc::PreconditionFailed, "p must lie in (0, 1)");
  const Poly a = scalar(root, family_2a_first(p));
  return exact_quotient(root * root - constant_like(root, 1), a);
}

TripleData gen_2a_family(const mpq_class& p, const Poly& b) {
  if (sgn(p) <= 0 || p >= 1) throw Error(Errc::PreconditionFailed, "p must lie in (0, 1)");
  const Poly a = scalar(b, family_2a_first(p));
  if (!poly_sqrt(a * b + constant_like(b, 1)))
    throw Error(Errc::PreconditionFailed, "ab + 1 is not a square for a = " + render(a));
  const Poly inv_p = scalar(b, 1 / p);
  const Poly c = b * scalar(b, 1 / (p * p)) + scalar(b, 2) * inv_p;
  auto res = verify_tuple({a, b, c}, 1);
  if (!res.report.ok) throw Error(Errc::PreconditionFailed, "family triple does not verify");
  TripleData data = extend_triple(*res.tuple);
  require(data.a == a && data.b == b && data.c == c, "family triple is not ordered a < b < c");
  require(data.d_minus() == a, "d- = a");
  require(data.r == scalar(b, p) * data.s, "r = ps");
  require(data.t == b * inv_p + constant_like(b, 1), "t = b/p + 1");
  return data;
}

Lemma6Form lemma6_forms(const Poly& a, const Poly& b, Lemma6Branch branch, bool upper) {
  const Poly one = constant_like(a, 1);
  const Poly two = scalar(a, 2);
  auto r = poly_sqrt(a * b + one);
  if (!r) throw Error(Errc::PreconditionFailed, "not a D(1)-pair");
  Poly dm, c;
  if (branch == Lemma6Branch::Regular) {
    const Poly sg = scalar(a, upper ? 1 : -1);
    dm = a + b + sg * two * *r;
    c = scalar(a, 4) * *r * (*r + sg * a) * (b + sg * *r);
  } else {
    if (!a.is_constant()) throw Error(Errc::PreconditionFailed, "family branches need a constant a");
    const FieldElem av = a.coeff(0);
    auto root = field_sqrt(av * av + FieldElem(1, a.spec()));
    if (!root) throw Error(Errc::PreconditionFailed, "a^2 + 1 is not a square");
    const bool up = branch == Lemma6Branch::Family2aUpper;
    // rho = sqrt(D-/B): a = +-(rho^2 - 1) / (2 rho).
    const FieldElem rho = up ? av + *root : *root - av;
    const FieldElem one_e(1, a.spec());
    const FieldElem two_e(2, a.spec());
    const FieldElem pm(up ? 1 : -1, a.spec());
    const FieldElem rho2 = rho * rho;
    dm = Poly(rho2) * b + Poly(pm * two_e * rho);
    c = Poly(pm * two_e * rho * (rho2 - one_e)) * b * b + Poly(two_e * (FieldElem(3, a.spec()) * rho2 - one_e)) * b +
        Poly(pm * (FieldElem(9, a.spec()) * rho2 - one_e) / (two_e * rho));
  }
  for (const Poly* p : {&dm, &c})
    if (p->is_zero() || *p == a || *p == b) throw Error(Errc::PreconditionFailed, "degenerate element");
  if (dm == c) throw Error(Errc::PreconditionFailed, "degenerate element");

  auto res = verify_tuple({a, b, dm, c}, 1);
  if (!res.report.ok) throw Error(Errc::PreconditionFailed, "the constructed set is not a D(1)-quadruple");
  if (branch == Lemma6Branch::Regular) {
    auto s = poly_sqrt(a * c + one);
    const Poly expected = two * *r * *r + scalar(a, upper ? 2 : -2) * a * *r - one;
    require(s && (*s == expected || -*s == expected), "s = 2r^2 +- 2ar - 1");
  }
  const TripleData abc = extend_triple({a, b, c}, 1);
  require(abc.d_minus() == dm, "d- of {a, b, c} is the constructed element");
  Lemma6Form out{std::move(*res.tuple), dm, c, false};
  if (!a.is_zero() && !b.is_zero()) out.degree_window = b.deg() < c.deg() && c.deg() == a.deg() + 2 * b.deg();
  return out;
}

}  // namespace dioph
