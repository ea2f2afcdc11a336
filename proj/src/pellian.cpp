#include "dioph/pellian.hpp"

#include <algorithm>

#include "dioph/error.hpp"

namespace dioph {

namespace {

int max_degree(const PellSolution& sol) {
  return std::max(sol.z.degree().value_or(-1), sol.x.degree().value_or(-1));
}

Poly scalar(const Poly& like, long v) { return Poly(FieldElem(v, like.spec())); }

bool at_least_one_in_abs(const Poly& p) {
  return poly_order(poly_abs(p), constant_like(p, 1)) != Ordering::Less;
}

}  // namespace

PellContext make_context(const TripleData& triple, PellEquation tag) {
  if (triple.n() != 1) throw Error(Errc::PreconditionFailed, "Pellian reduction needs a D(1)-triple");
  if (tag == PellEquation::A) return {tag, triple.a, triple.c, triple.s, triple.alpha, triple.gamma};
  return {tag, triple.b, triple.c, triple.t, triple.beta, triple.gamma};
}

bool is_solution(const PellContext& ctx, const PellSolution& sol) {
  return ctx.first * sol.z * sol.z - ctx.c * sol.x * sol.x == ctx.first - ctx.c;
}

PellSolution forward_step(const PellContext& ctx, const PellSolution& sol) {
  return {ctx.unit * sol.z + ctx.c * sol.x, ctx.first * sol.z + ctx.unit * sol.x};
}

PellSolution backward_step(const PellContext& ctx, const PellSolution& sol) {
  return {ctx.unit * sol.z - ctx.c * sol.x, ctx.unit * sol.x - ctx.first * sol.z};
}

bool within_initial_bounds(const PellContext& ctx, const PellSolution& sol) {
  const int dz = sol.z.degree().value_or(-1);
  const int dx = sol.x.degree().value_or(-1);
  return 4 * dz <= 3 * ctx.gamma - ctx.first_degree && 4 * dx <= ctx.first_degree + ctx.gamma;
}

Reduction reduce_solution(const Poly& z, const Poly& x, const PellContext& ctx) {
  PellSolution cur{z, x};
  if (!is_solution(ctx, cur)) throw Error(Errc::NotASolution, "(" + render(z) + ", " + render(x) + ")");
  int steps = 0;
  for (;;) {
    PellSolution next = backward_step(ctx, cur);
    if (max_degree(next) >= max_degree(cur)) break;
    cur = std::move(next);
    ++steps;
  }
  // Two neighbours of an orbit can share the minimal degree; take the lower one.
  PellSolution next = backward_step(ctx, cur);
  if (max_degree(next) == max_degree(cur) && max_degree(cur) > 0) {
    cur = std::move(next);
    ++steps;
  }
  Reduction out{cur, steps, within_initial_bounds(ctx, cur)};
  return out;
}

PellSolution orbit_minimum(const PellContext& ctx, const PellSolution& sol) {
  if (!is_solution(ctx, sol)) throw Error(Errc::NotASolution, "(" + render(sol.z) + ", " + render(sol.x) + ")");
  PellSolution cur = sol;
  for (;;) {
    PellSolution next = forward_step(ctx, cur);
    if (max_degree(next) >= max_degree(cur)) break;
    cur = std::move(next);
  }
  return reduce_solution(cur.z, cur.x, ctx).initial;
}

namespace {

struct Accepted {
  std::string label;
  Poly z, x, d;
};

std::vector<Accepted> catalog_for(const TripleData& t, PellEquation tag, std::vector<InitialCandidate>& trace) {
  const PellContext ctx = make_context(t, tag);
  const Poly one = constant_like(t.a, 1);
  const Poly wm = t.c * t.r - t.s * t.t;
  const std::vector<std::pair<std::string, Poly>> candidates = {
      {"+1", one},    {"-1", -one},   {"+s", t.s},           {"-s", -t.s},
      {"+t", t.t},    {"-t", -t.t},   {"+(cr-st)", wm},      {"-(cr-st)", -wm},
  };
  std::vector<Accepted> out;
  std::vector<Poly> seen;
  for (const auto& [label, z] : candidates) {
    auto reject = [&](const std::string& why) { trace.push_back({tag, label, z, false, why}); };
    if (std::find(seen.begin(), seen.end(), z) != seen.end()) {
      reject("duplicate");
      continue;
    }
    seen.push_back(z);
    auto qr = poly_divrem(z * z - one, ctx.c);
    if (!qr.remainder.is_zero()) {
      reject("c does not divide z^2 - 1");
      continue;
    }
    auto x = poly_sqrt(ctx.first * qr.quotient + one);
    if (!x || x->is_zero()) {
      reject("co-solution is not a non-zero square root");
      continue;
    }
    if (!at_least_one_in_abs(z) || !at_least_one_in_abs(*x)) {
      reject("|z| >= 1 or |x| >= 1 fails");
      continue;
    }
    if (!within_initial_bounds(ctx, {z, *x})) {
      reject("degree bounds");
      continue;
    }
    trace.push_back({tag, label, z, true, ""});
    out.push_back({label, z, std::move(*x), std::move(qr.quotient)});
  }
  return out;
}

}  // namespace

InitialCatalog enumerate_initials(const TripleData& triple) {
  InitialCatalog out;
  const auto first = catalog_for(triple, PellEquation::A, out.trace);
  const auto second = catalog_for(triple, PellEquation::B, out.trace);
  for (const auto& p : first)
    for (const auto& q : second) out.initials.push_back({p.z, p.x, p.d, q.z, q.x, q.d, p.label, q.label});
  return out;
}

RecurrencePair::RecurrencePair(std::shared_ptr<const TripleData> triple, InitialData initials)
    : triple_(std::move(triple)), initials_(std::move(initials)) {
  const TripleData& t = *triple_;
  const PellContext ca = make_context(t, PellEquation::A);
  const PellContext cb = make_context(t, PellEquation::B);
  v_ = {initials_.z0};
  x_ = {initials_.x0};
  w_ = {initials_.z1};
  y_ = {initials_.y1};
  PellSolution v1 = forward_step(ca, {initials_.z0, initials_.x0});
  PellSolution w1 = forward_step(cb, {initials_.z1, initials_.y1});
  v_.push_back(std::move(v1.z));
  x_.push_back(std::move(v1.x));
  w_.push_back(std::move(w1.z));
  y_.push_back(std::move(w1.x));

  // gamma/2 <= deg(v_1) <= (alpha + 5 gamma)/4, likewise for w_1 with beta.
  auto window = [&](const Poly& p, int other, const char* name) {
    const int d = p.degree().value_or(-1);
    if (d < 0 || 2 * d < t.gamma || 4 * d > other + 5 * t.gamma)
      flags_.push_back(std::string("deg(") + name + "_1) outside its window");
  };
  window(v_[1], t.alpha, "v");
  window(w_[1], t.beta, "w");
}

RecurrencePair advance(RecurrencePair seq, int steps, bool strict) {
  if (steps < 0) throw Error(Errc::PreconditionFailed, "steps must be non-negative");
  const TripleData& t = *seq.triple_;
  const Poly two_s = scalar(t.a, 2) * t.s;
  const Poly two_t = scalar(t.a, 2) * t.t;
  auto extend = [](std::vector<Poly>& seqv, const Poly& twice) {
    const std::size_t k = seqv.size();
    seqv.push_back(twice * seqv[k - 1] - seqv[k - 2]);
  };
  auto law = [&](const std::vector<Poly>& seqv, int other, const char* name) {
    const std::size_t m = seqv.size() - 1;
    const Degree d1 = seqv[1].degree();
    const Degree dm = seqv[m].degree();
    const bool ok = d1 && dm && 2 * (*dm - *d1) == static_cast<int>(m - 1) * (other + t.gamma);
    if (ok) return;
    std::string msg = std::string("deg(") + name + "_" + std::to_string(m) + ") breaks the degree law";
    if (strict) throw Error(Errc::DegreeLawViolation, msg);
    seq.flags_.push_back(std::move(msg));
  };
  for (int i = 0; i < steps; ++i) {
    extend(seq.v_, two_s);
    extend(seq.x_, two_s);
    extend(seq.w_, two_t);
    extend(seq.y_, two_t);
    law(seq.v_, t.alpha, "v");
    law(seq.w_, t.beta, "w");
  }
  return seq;
}

std::vector<SeqIntersection> find_intersections(RecurrencePair& seq) {
  seq.intersections_.clear();
  const Poly one = constant_like(seq.triple_->a, 1);
  for (std::size_t m = 0; m < seq.v_.size(); ++m) {
    for (std::size_t n = 0; n < seq.w_.size(); ++n) {
      if (seq.v_[m].degree() != seq.w_[n].degree()) continue;
      if (!(seq.v_[m] == seq.w_[n])) continue;
      const Poly& z = seq.v_[m];
      Poly d = exact_quotient(z * z - one, seq.triple_->c);
      seq.intersections_.push_back({static_cast<int>(m), static_cast<int>(n), z, std::move(d)});
    }
  }
  return seq.intersections_;
}

bool CongruenceReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CongruenceRecord& r) { return r.pass; });
}

CongruenceReport check_congruences(const RecurrencePair& seq, int upTo) {
  if (upTo < 0 || seq.max_index() < upTo)
    throw Error(Errc::PreconditionFailed, "sequences are shorter than the requested index");
  const TripleData& t = seq.triple();
  const InitialData& in = seq.initials();
  const Poly c2 = t.c * t.c;
  auto k = [&](long v) { return scalar(t.a, v); };
  CongruenceReport out;
  // v: (first, unit, z, x) = (a, s, z0, x0); w: (b, t, z1, y1).
  auto run = [&](const std::vector<Poly>& seqv, const Poly& first, const Poly& unit, const Poly& z, const Poly& x,
                 char name) {
    for (int i = 0; i <= upTo; ++i) {
      const long m = i / 2;
      Poly mod_c, mod_c2;
      if (i % 2 == 0) {
        mod_c = z;
        mod_c2 = z + k(2) * t.c * (first * z * k(m * m) + unit * x * k(m));
      } else {
        mod_c = unit * z + t.c * x;
        mod_c2 = unit * z + t.c * (k(2) * first * unit * z * k(m * (m + 1)) + x * k(2 * m + 1));
      }
      out.records.push_back({"L5", name, i, divides(t.c, seqv[static_cast<std::size_t>(i)] - mod_c)});
      out.records.push_back({"L8", name, i, divides(c2, seqv[static_cast<std::size_t>(i)] - mod_c2)});
    }
  };
  run(seq.v(), t.a, t.s, in.z0, in.x0, 'v');
  run(seq.w(), t.b, t.t, in.z1, in.y1, 'w');
  out.records.push_back({"2rst", '-', 0, divides(t.c, k(2) * t.r * t.s * t.t - (t.a + t.b - t.d_minus()))});
  return out;
}

std::string to_string(DKind k) {
  switch (k) {
    case DKind::Zero: return "zero";
    case DKind::DMinus: return "d-";
    case DKind::DPlus: return "d+";
    case DKind::Element: return "element";
    case DKind::Other: return "other";
  }
  return "other";
}

namespace {

std::vector<IntersectionRecord> intersect_one(const std::shared_ptr<const TripleData>& tp, const InitialData& init,
                                              int maxIndex) {
  const TripleData& t = *tp;
  RecurrencePair seq = advance(RecurrencePair(tp, init), maxIndex - 1, false);
  std::vector<IntersectionRecord> out;
  const Poly one = constant_like(t.a, 1);
  for (auto& hit : find_intersections(seq)) {
    IntersectionRecord rec{init, hit.m, hit.n, hit.z, hit.d, DKind::Other, false, false, false};
    const Poly& d = rec.d;
    if (d.is_zero()) {
      rec.kind = DKind::Zero;
    } else if (d == t.d_minus()) {
      rec.kind = DKind::DMinus;
    } else if (d == t.d_plus()) {
      rec.kind = DKind::DPlus;
    } else if (d == t.a || d == t.b || d == t.c) {
      rec.kind = DKind::Element;
    }
    rec.squares = poly_sqrt(t.a * d + one) && poly_sqrt(t.b * d + one) && poly_sqrt(t.c * d + one);
    rec.proper = !d.is_zero() && !(d == t.a) && !(d == t.b) && !(d == t.c);
    if (rec.squares && rec.proper) {
      auto res = verify_tuple({t.a, t.b, t.c, d}, 1);
      rec.regular = res.report.ok && is_regular_quadruple(*res.tuple);
    } else {
      rec.regular = regular_quadruple_any_split(t.a, t.b, t.c, d, 1);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<IntersectionRecord> intersect(const TripleData& triple, int maxIndex, Exec exec) {
  if (maxIndex < 3) throw Error(Errc::PreconditionFailed, "maxIndex must be at least 3");
  auto tp = std::make_shared<const TripleData>(triple);
  const auto catalog = enumerate_initials(triple);
  const auto& inits = catalog.initials;
  std::vector<std::vector<IntersectionRecord>> parts(inits.size());
  const long count = static_cast<long>(inits.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = intersect_one(tp, inits[static_cast<std::size_t>(i)], maxIndex);
  } else {
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = intersect_one(tp, inits[static_cast<std::size_t>(i)], maxIndex);
  }
  std::vector<IntersectionRecord> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

}  // namespace dioph
