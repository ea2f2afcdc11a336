#include <gtest/gtest.h>

#include "dioph/error.hpp"
#include "dioph/fixtures.hpp"
#include "dioph/render.hpp"
#include "dioph/search.hpp"
#include "support.hpp"

using namespace dioph;
using namespace testing_support;

namespace {

bool contains(const Corpus& c, const std::vector<std::string>& elems) {
  const auto want = Ps(elems);
  for (const auto& e : c.triples)
    if (e.data.triple.elems() == want) return true;
  return false;
}

std::vector<Poly> scaled(const std::vector<std::string>& elems, long k) {
  std::vector<Poly> out;
  for (const auto& p : Ps(elems)) out.push_back(p * FieldElem(k));
  return out;
}

}  // namespace

TEST(Corpus, PairChain) {
  const Corpus c = build_corpus(5, {{P("X - 1"), P("X + 1")}});
  EXPECT_TRUE(contains(c, {"X - 1", "X + 1", "4*X"}));
  EXPECT_TRUE(contains(c, {"X - 1", "X + 1", "16*X^3 - 4*X"}));
  EXPECT_TRUE(contains(c, {"X - 1", "4*X", "16*X^3 - 4*X"}));
  EXPECT_TRUE(contains(c, {"X + 1", "4*X", "16*X^3 - 4*X"}));
  for (const auto& e : c.triples) {
    EXPECT_LE(e.data.gamma, 5);
    EXPECT_EQ(e.data.n(), 1);
    EXPECT_EQ(lead_sign(e.data.a), Sign::Positive);
  }
}

TEST(Corpus, ConstantOnly) {
  const Corpus c = build_corpus(0, {{P("1"), P("3")}});
  EXPECT_TRUE(contains(c, {"1", "3", "8"}));
  EXPECT_TRUE(contains(c, {"1", "8", "120"}));
  for (const auto& e : c.triples) EXPECT_TRUE(e.data.c.is_constant());
}

TEST(Corpus, FixturesOnly) {
  const Corpus c = build_corpus(20, {});
  std::size_t fixtures = 0;
  for (const auto& e : c.triples) {
    if (e.provenance == Provenance::PaperFixture) ++fixtures;
  }
  EXPECT_EQ(fixtures, fixture_triples().size());
  // nothing beyond fixtures and the 2a family seeds
  for (const auto& e : c.triples) EXPECT_NE(e.provenance, Provenance::PairChain);
}

TEST(Corpus, Deduplicates) {
  const Corpus c = build_corpus(4, {{P("X - 1"), P("X + 1")}, {P("X + 1"), P("X - 1")}});
  std::set<std::string> keys;
  for (const auto& e : c.triples) {
    std::string k = e.data.a.spec().name();
    for (const auto& p : e.data.triple.elems()) k += "|" + render(p);
    EXPECT_TRUE(keys.insert(k).second) << k;
  }
}

TEST(TheoremCheck, SmallCorpus) {
  const Corpus c = build_corpus(5, {{P("X - 1"), P("X + 1")}});
  const SearchReport r = theorem_check(c, 6);
  EXPECT_EQ(r.irregular, 0u);
  EXPECT_EQ(r.unexpected, 0u);
  EXPECT_TRUE(r.confirmed());
  EXPECT_GT(r.quadruples, 0u);
  EXPECT_EQ(r.candidates, c.triples.size());
}

TEST(TheoremCheck, ScaledD5Triples) {
  Corpus c;
  c.max_degree = 3;
  for (TripleData& t : fixture_triples())
    if (t.a.spec() == FieldSpec::quadratic(5)) c.triples.push_back({std::move(t), Provenance::PaperFixture});
  ASSERT_EQ(c.triples.size(), 4u);
  const SearchReport r = theorem_check(c, 6);
  EXPECT_EQ(r.irregular, 0u);
  EXPECT_TRUE(r.confirmed());
}

TEST(TheoremCheck, EmptyCorpus) {
  const SearchReport r = theorem_check(Corpus{}, 6);
  EXPECT_EQ(r.candidates, 0u);
  EXPECT_EQ(r.quadruples, 0u);
  EXPECT_TRUE(r.confirmed());
}

TEST(TheoremCheck, SerialMatchesParallel) {
  const Corpus c = build_corpus(4, {{P("X"), P("X + 2")}});
  EXPECT_EQ(to_json(theorem_check(c, 5, Exec::Serial)), to_json(theorem_check(c, 5, Exec::Parallel)));
}

TEST(ZxSearch, NonSquare) {
  const SearchReport a = zx_nonsquare_search(2, 1, 5);
  EXPECT_EQ(a.candidates, 120u);
  EXPECT_EQ(a.quadruples, 0u);
  EXPECT_TRUE(a.confirmed());
  const SearchReport b = zx_nonsquare_search(3, 2, 3);
  EXPECT_EQ(b.quadruples, 0u);
  try {
    zx_nonsquare_search(4, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionFailed);
  }
}

TEST(ZxSearch, Square) {
  const SearchReport a = zx_square_quintuple_search(1, 1, 3);
  EXPECT_EQ(a.quintuples, 0u);
  const SearchReport b = zx_square_quintuple_search(4, 1, 5);
  EXPECT_EQ(b.quintuples, 0u);
  EXPECT_EQ(b.irregular, 0u);
  const SearchReport c = zx_square_quintuple_search(9, 1, 2);
  EXPECT_EQ(c.quintuples, 0u);
  EXPECT_THROW(zx_square_quintuple_search(2, 1, 2), Error);
}

TEST(ZxSearch, Budget) {
  try {
    zx_nonsquare_search(2, 3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundsTooLarge);
  }
}

TEST(ZxSearch, ScaledQuadruplesAreRegular) {
  for (long root : {1L, 2L, 3L}) {
    std::vector<Poly> cands = scaled({"X - 1", "X + 1", "4*X", "16*X^3 - 4*X"}, root);
    for (const auto& p : scaled({"X", "X + 2", "4*X + 4", "4*(X + 1)*(2*X + 1)*(2*X + 3)"}, root)) cands.push_back(p);
    for (const char* noise : {"X^2 + 3", "2*X - 7", "5"}) cands.push_back(P(noise));
    const SearchReport r = zx_square_quintuple_search(root * root, cands);
    EXPECT_GE(r.quadruples, 2u);
    EXPECT_EQ(r.irregular, 0u);
    EXPECT_EQ(r.quintuples, 0u);
    for (const auto& quad : r.found) {
      std::vector<Poly> down;
      for (const auto& e : quad) down.push_back(e * FieldElem(mpq_class(1, root)));
      auto res = verify_tuple(down, 1);
      ASSERT_TRUE(res.report.ok);
      EXPECT_TRUE(is_regular_quadruple(*res.tuple));
    }
  }
}

TEST(ZxSearch, GraphSerialMatchesParallel) {
  const auto polys = integer_candidates(1, 4);
  EXPECT_EQ(build_pair_graph(polys, 1, Exec::Serial), build_pair_graph(polys, 1, Exec::Parallel));
}

TEST(ZxSearch, CliqueFilterNeedsNonConstant) {
  const auto polys = Ps({"1", "3", "8", "120", "X"});
  const auto graph = build_pair_graph(polys, 1);
  EXPECT_TRUE(find_cliques(polys, graph, 4).empty());
  EXPECT_EQ(find_cliques(polys, graph, 2).size(), 0u);
  const auto mixed = Ps({"X - 1", "X + 1", "4*X", "16*X^3 - 4*X"});
  EXPECT_EQ(find_cliques(mixed, build_pair_graph(mixed, 1), 4).size(), 1u);
}

TEST(ZxSearch, Deterministic) {
  EXPECT_EQ(to_json(zx_square_quintuple_search(4, 1, 4)), to_json(zx_square_quintuple_search(4, 1, 4)));
}
