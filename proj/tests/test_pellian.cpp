#include <gtest/gtest.h>

#include "dioph/error.hpp"
#include "dioph/pellian.hpp"
#include "support.hpp"

using namespace dioph;
using namespace testing_support;

namespace {

std::shared_ptr<const TripleData> triple(const std::vector<std::string>& e) {
  return std::make_shared<const TripleData>(extend_triple(Ps(e), 1));
}

const InitialData* find_initial(const InitialCatalog& cat, const Poly& z0, const Poly& z1) {
  for (const auto& in : cat.initials)
    if (in.z0 == z0 && in.z1 == z1) return &in;
  return nullptr;
}

}  // namespace

TEST(Pell, ContextAndSteps) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const PellContext a = make_context(*t, PellEquation::A);
  EXPECT_EQ(a.first, t->a);
  EXPECT_EQ(a.unit, t->s);
  const PellContext b = make_context(*t, PellEquation::B);
  EXPECT_EQ(b.first, t->b);
  EXPECT_EQ(b.unit, t->t);
  const PellSolution one{P("1"), P("1")};
  EXPECT_TRUE(is_solution(a, one));
  EXPECT_EQ(backward_step(a, forward_step(a, one)), one);
  const auto d5 = std::make_shared<const TripleData>(extend_triple(Ps({"X", "4*X + 4*sqrt(5)", "9*X + 6*sqrt(5)"}), 5));
  EXPECT_THROW(make_context(*d5, PellEquation::A), Error);
}

TEST(Pell, ReduceExamples) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const PellContext a = make_context(*t, PellEquation::A);
  const Reduction r = reduce_solution(P("8*X^2 - 1"), P("4*X^2 - 2*X - 1"), a);
  EXPECT_EQ(r.initial, (PellSolution{P("-1"), P("1")}));
  EXPECT_EQ(r.exponent, 2);
  EXPECT_TRUE(r.within_bounds);
  const Reduction fixed = reduce_solution(P("1"), P("1"), a);
  EXPECT_EQ(fixed.initial, (PellSolution{P("1"), P("1")}));
  EXPECT_EQ(fixed.exponent, 0);
  try {
    reduce_solution(P("8*X^2 - 1"), P("12*X^2 - 14*X + 3"), a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASolution);
  }
}

TEST(Pell, OrbitMinimumHandlesBothSides) {
  const auto t = triple({"X - 1", "X + 1", "16*X^3 - 4*X"});
  const PellContext a = make_context(*t, PellEquation::A);
  const PellSolution base{P("1"), P("1")};
  const PellSolution behind = backward_step(a, backward_step(a, base));
  EXPECT_EQ(orbit_minimum(a, behind), base);
  EXPECT_EQ(orbit_minimum(a, forward_step(a, base)), base);
}

TEST(Initials, Examples) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const InitialCatalog cat = enumerate_initials(*t);
  const InitialData* plus = find_initial(cat, P("1"), P("1"));
  ASSERT_NE(plus, nullptr);
  EXPECT_TRUE(plus->d0.is_zero());
  EXPECT_EQ(plus->x0, P("1"));
  ASSERT_NE(find_initial(cat, P("-1"), P("-1")), nullptr);

  const auto u = triple({"X - 1", "X + 1", "16*X^3 - 4*X"});
  const InitialCatalog cu = enumerate_initials(*u);
  bool saw_t = false, saw_w = false;
  for (const auto& in : cu.initials) {
    if (in.z0 == u->t || in.z0 == -u->t) {
      saw_t = true;
      EXPECT_EQ(in.d0, u->b);
    }
    const Poly wm = u->c * u->r - u->s * u->t;
    if (in.z0 == wm || in.z0 == -wm) {
      saw_w = true;
      EXPECT_EQ(in.d0, u->d_minus());
    }
  }
  EXPECT_TRUE(saw_t);
  EXPECT_TRUE(saw_w);
}

TEST(Initials, SatisfyInvariants) {
  Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    const TripleData t = random_d1_triple(rng, 3, 9);
    const InitialCatalog cat = enumerate_initials(t);
    const PellContext a = make_context(t, PellEquation::A);
    const PellContext b = make_context(t, PellEquation::B);
    const Poly one = constant_like(t.a, 1);
    EXPECT_FALSE(cat.initials.empty());
    for (const auto& in : cat.initials) {
      EXPECT_EQ(t.a * in.d0 + one, in.x0 * in.x0);
      EXPECT_EQ(t.c * in.d0 + one, in.z0 * in.z0);
      EXPECT_EQ(t.b * in.d1 + one, in.y1 * in.y1);
      EXPECT_EQ(t.c * in.d1 + one, in.z1 * in.z1);
      EXPECT_TRUE(within_initial_bounds(a, {in.z0, in.x0}));
      EXPECT_TRUE(within_initial_bounds(b, {in.z1, in.y1}));
      EXPECT_EQ(lead_sign(in.x0), Sign::Positive);
      EXPECT_EQ(lead_sign(in.y1), Sign::Positive);
    }
    // the trace keeps every candidate, accepted or not
    EXPECT_EQ(cat.trace.size(), 16u);
  }
}

TEST(Recurrence, Examples) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const InitialCatalog cat = enumerate_initials(*t);
  RecurrencePair minus = advance(RecurrencePair(t, *find_initial(cat, P("-1"), P("-1"))), 3);
  EXPECT_EQ(minus.v()[0], P("-1"));
  EXPECT_EQ(minus.v()[1], P("2*X + 1"));
  EXPECT_EQ(minus.v()[2], P("8*X^2 - 1"));
  EXPECT_EQ(minus.max_index(), 4);
  RecurrencePair plus = advance(RecurrencePair(t, *find_initial(cat, P("1"), P("1"))), 2);
  EXPECT_EQ(plus.v()[1], P("6*X - 1"));
  EXPECT_EQ(plus.v()[2], P("24*X^2 - 16*X + 1"));
  EXPECT_EQ(plus.v()[2].deg(), 2);
  EXPECT_TRUE(plus.flags().empty());
  EXPECT_THROW(advance(plus, -1), Error);
}

TEST(Recurrence, StrictDegreeLaw) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  // z0 = 2sc, x0 = 1 - 2s^2 is no solution: v_1 = c and v_2 = 2s c - z0 = 0
  InitialData bogus{P("16*X^2 - 8*X"), P("-8*X^2 + 8*X - 1"), P("0"), P("1"), P("1"), P("0"), "", ""};
  RecurrencePair seq(t, bogus);
  try {
    advance(seq, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeLawViolation);
  }
  EXPECT_FALSE(advance(seq, 3, false).flags().empty());
}

TEST(Recurrence, PellIdentityAlongSequences) {
  Rng rng(52);
  for (int i = 0; i < 15; ++i) {
    auto t = std::make_shared<const TripleData>(random_d1_triple(rng, 3, 9));
    const InitialCatalog cat = enumerate_initials(*t);
    const PellContext a = make_context(*t, PellEquation::A);
    const PellContext b = make_context(*t, PellEquation::B);
    for (const auto& in : cat.initials) {
      RecurrencePair seq = advance(RecurrencePair(t, in), 5);
      for (int m = 0; m <= seq.max_index(); ++m) {
        EXPECT_TRUE(is_solution(a, {seq.v()[m], seq.x()[m]}));
        EXPECT_TRUE(is_solution(b, {seq.w()[m], seq.y()[m]}));
      }
    }
  }
}

TEST(Congruences, Examples) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const InitialCatalog cat = enumerate_initials(*t);
  RecurrencePair seq = advance(RecurrencePair(t, *find_initial(cat, P("-1"), P("-1"))), 5);
  EXPECT_TRUE(divides(t->c, seq.v()[2] - P("-1")));
  EXPECT_EQ(seq.v()[2], P("-1") + P("2") * t->c * (t->a * P("-1") + t->s));
  const CongruenceReport rep = check_congruences(seq, 6);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.records.size(), 2u * 2u * 7u + 1u);
  EXPECT_EQ(rep.records.back().law, "2rst");
  EXPECT_THROW(check_congruences(seq, 7), Error);
}

TEST(Intersect, Examples) {
  const auto t = triple({"X - 1", "X + 1", "4*X"});
  const auto recs = intersect(*t, 4);
  bool saw_d_plus = false, saw_zero = false;
  for (const auto& r : recs) {
    if (r.m == 2 && r.n == 2 && r.z == P("8*X^2 - 1") && r.initials.z0 == P("-1") && r.initials.z1 == P("-1")) {
      saw_d_plus = true;
      EXPECT_EQ(r.d, P("16*X^3 - 4*X"));
      EXPECT_TRUE(r.regular);
      EXPECT_EQ(r.kind, DKind::DPlus);
    }
    if (r.m == 0 && r.n == 0 && r.z == P("1")) {
      saw_zero = true;
      EXPECT_TRUE(r.d.is_zero());
      EXPECT_FALSE(r.proper);
    }
  }
  EXPECT_TRUE(saw_d_plus);
  EXPECT_TRUE(saw_zero);
  EXPECT_THROW(intersect(*t, 2), Error);

  const auto u = triple({"X - 1", "X + 1", "16*X^3 - 4*X"});
  bool saw_d_minus = false;
  for (const auto& r : intersect(*u, 4))
    if (r.d == P("4*X")) {
      saw_d_minus = true;
      EXPECT_EQ(r.kind, DKind::DMinus);
      EXPECT_TRUE(r.regular);
    }
  EXPECT_TRUE(saw_d_minus);
}

TEST(Intersect, SerialAndParallelAgree) {
  Rng rng(53);
  for (int i = 0; i < 8; ++i) {
    const TripleData t = random_d1_triple(rng, 3, 9);
    const auto s = intersect(t, 5, Exec::Serial);
    const auto p = intersect(t, 5, Exec::Parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      EXPECT_EQ(s[j].m, p[j].m);
      EXPECT_EQ(s[j].n, p[j].n);
      EXPECT_EQ(s[j].d, p[j].d);
      EXPECT_EQ(s[j].initials.z0, p[j].initials.z0);
    }
  }
}

TEST(Pell, DescentRoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const TripleData t = random_d1_triple(rng, 3, 6);
    const auto cat = enumerate_initials(t);
    if (cat.initials.empty()) continue;
    const InitialData& in = cat.initials[rng.integer(0, static_cast<long>(cat.initials.size()) - 1)];
    const PellContext ctx = make_context(t, PellEquation::B);
    const PellSolution init = orbit_minimum(ctx, {in.z1, in.y1});
    const int m = static_cast<int>(rng.integer(0, 4));
    PellSolution sol = init;
    for (int j = 0; j < m; ++j) sol = forward_step(ctx, sol);
    const Reduction red = reduce_solution(sol.z, sol.x, ctx);
    const PellSolution neg{-init.z, -init.x};
    EXPECT_TRUE(red.initial == init || red.initial == neg);
    EXPECT_EQ(red.exponent, m);
  }
}
