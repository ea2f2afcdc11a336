#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "dioph/error.hpp"
#include "dioph/extend.hpp"
#include "dioph/fixtures.hpp"
#include "support.hpp"

using namespace dioph;
using namespace testing_support;

namespace {

DTuple tuple(const std::vector<std::string>& elems, long n = 1) {
  auto res = verify_tuple(Ps(elems), n);
  EXPECT_TRUE(res.report.ok);
  return *res.tuple;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::SyntaxError;
}

}  // namespace

TEST(VerifyTuple, Fermat) {
  const DTuple t = tuple({"120", "8", "3", "1"});
  EXPECT_EQ(t.elems(), Ps({"1", "3", "8", "120"}));
  const std::vector<long> expected = {2, 3, 11, 5, 19, 31};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(t.witness(i, j), Poly(FieldElem(expected[k++])));
  EXPECT_EQ(t.witness(3, 2), t.witness(2, 3));
}

TEST(VerifyTuple, D5Quadruple) {
  auto res = verify_tuple(d5_quadruple(), 5);
  ASSERT_TRUE(res.report.ok);
  EXPECT_TRUE(is_regular_quadruple(*res.tuple));
  EXPECT_EQ(res.tuple->spec(), FieldSpec::quadratic(5));
}

TEST(VerifyTuple, ReportsFailingPairs) {
  auto res = verify_tuple(Ps({"X - 1", "X + 1", "X"}), 1);
  EXPECT_FALSE(res.report.ok);
  EXPECT_FALSE(res.tuple.has_value());
  ASSERT_EQ(res.sorted, Ps({"X - 1", "X", "X + 1"}));
  bool saw = false;
  for (const auto& f : res.report.failures)
    if (f.i == 0 && f.j == 1) {
      saw = true;
      EXPECT_EQ(f.value, P("X^2 - X + 1"));
    }
  EXPECT_TRUE(saw);
}

TEST(VerifyTuple, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { verify_tuple({}, 1); }), Errc::InvalidTuple);
  EXPECT_EQ(code_of([] { verify_tuple(Ps({"1", "3"}), 0); }), Errc::InvalidTuple);
  EXPECT_EQ(code_of([] { verify_tuple(Ps({"0", "3"}), 1); }), Errc::InvalidTuple);
  EXPECT_EQ(code_of([] { verify_tuple(Ps({"X", "X"}), 1); }), Errc::InvalidTuple);
  EXPECT_EQ(code_of([] { verify_tuple({P("X"), P("X + sqrt(2)")}, 1); }), Errc::MixedFields);
}

TEST(VerifyTuple, WarnsAboutSeveralConstants) {
  auto res = verify_tuple(Ps({"1", "3", "X"}), 1);
  EXPECT_FALSE(res.report.warnings.empty());
  auto clean = verify_tuple(Ps({"X - 1", "X + 1", "4*X"}), 1);
  EXPECT_TRUE(clean.report.warnings.empty());
}

TEST(VerifyTuple, ImaginaryFieldIsVerifiedUnsorted) {
  // iX * (-iX + 2i) + 1 = (X - 1)^2
  auto res = verify_tuple({P("sqrt(-1)*X"), P("-sqrt(-1)*X + 2*sqrt(-1)")}, 1);
  EXPECT_TRUE(res.report.ok);
  EXPECT_EQ(res.tuple->witness(0, 1), P("X - 1").promoted(FieldSpec::quadratic(-1)));
}

TEST(Witnesses, Examples) {
  const Witnesses a = triple_witnesses(tuple({"X - 1", "X + 1", "4*X"}));
  EXPECT_EQ(a.r, P("X"));
  EXPECT_EQ(a.s, P("2*X - 1"));
  EXPECT_EQ(a.t, P("2*X + 1"));
  const Witnesses b = triple_witnesses(tuple({"4/3", "(4*X^2 + 2*X - 2)/3", "12*X^2 + 6*X"}));
  EXPECT_EQ(b.r, P("(4*X + 1)/3"));
  EXPECT_EQ(b.s, P("4*X + 1"));
  EXPECT_EQ(b.t, P("4*X^2 + 2*X - 1"));
  const Witnesses c = triple_witnesses(tuple({"1", "3", "8"}));
  EXPECT_EQ(c.r, P("2"));
  EXPECT_EQ(c.s, P("3"));
  EXPECT_EQ(c.t, P("5"));
  EXPECT_EQ(code_of([] { triple_witnesses(tuple({"1", "3", "8", "120"})); }), Errc::WrongArity);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_regular_triple(tuple({"X - 1", "X + 1", "4*X"})));
  EXPECT_TRUE(is_regular_triple(tuple({"1", "3", "8"})));
  EXPECT_FALSE(is_regular_triple(tuple({"X - 1", "X + 1", "16*X^3 - 4*X"})));
  EXPECT_TRUE(is_regular_quadruple(tuple({"1", "3", "8", "120"})));
  auto bad = verify_tuple(Ps({"X - 1", "X + 1", "4*X", "144*X^3 - 192*X^2 + 76*X - 8"}), 1);
  EXPECT_FALSE(bad.report.ok);
  EXPECT_FALSE(bad.tuple.has_value());
  EXPECT_FALSE(regular_quadruple_any_split(P("1"), P("3"), P("8"), P("121"), 1));
  EXPECT_TRUE(regular_quadruple_any_split(P("120"), P("3"), P("1"), P("8"), 1));
}

TEST(RegularityProperties, PairExtensionsAreRegularTriples) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = random_d1_pair(rng);
    const PairExtension ext = extend_pair(a, b, 1);
    for (const Poly* c : {&ext.c_plus, &ext.c_minus}) {
      if (c->is_zero() || *c == a || *c == b) continue;
      auto res = verify_tuple({a, b, *c}, 1);
      ASSERT_TRUE(res.report.ok);
      EXPECT_TRUE(is_regular_triple(*res.tuple));
    }
  }
}

TEST(RegularityProperties, QuadrupleAgreesWithTripleRoots) {
  Rng rng(32);
  std::vector<std::vector<Poly>> quads;
  for (int i = 0; i < 60; ++i) {
    const auto [a, b] = random_d1_pair(rng, 3, 9);
    quads.push_back(pair_regular_quadruple(a, b).elems());
  }
  quads.push_back(d5_quadruple());
  quads.push_back(Ps({"1", "3", "8", "120"}));
  for (const auto& q : quads) {
    const long n = q.front().spec().is_rational() ? 1 : 5;
    auto res = verify_tuple(q, n);
    ASSERT_TRUE(res.report.ok);
    const bool regular = is_regular_quadruple(*res.tuple);
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<Poly> rest;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != skip) rest.push_back(res.sorted[i]);
      const TripleData t = extend_triple(rest, n);
      const Poly& d = res.sorted[skip];
      EXPECT_EQ(regular, d == t.d_plus() || d == t.d_minus());
    }
  }
}

TEST(RegularityProperties, VerdictIgnoresOrder) {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    const auto [a, b] = random_d1_pair(rng, 3, 9);
    std::vector<Poly> q = pair_regular_quadruple(a, b).elems();
    q.push_back(P("X^2 + 7"));
    const auto base = verify_tuple(q, 1);
    std::shuffle(q.begin(), q.end(), rng.engine());
    const auto shuffled = verify_tuple(q, 1);
    EXPECT_EQ(base.report.ok, shuffled.report.ok);
    EXPECT_EQ(base.sorted, shuffled.sorted);
    EXPECT_EQ(base.report.failures.size(), shuffled.report.failures.size());
  }
}
