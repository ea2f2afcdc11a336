#ifndef DIOPH_SEARCH_HPP
#define DIOPH_SEARCH_HPP

#include <string>
#include <utility>
#include <vector>

#include "dioph/pellian.hpp"

namespace dioph {

enum class Provenance { PairChain, Family2a, PaperFixture };
std::string to_string(Provenance p);

struct CorpusEntry {
  TripleData data;
  Provenance provenance;
};

struct Corpus {
  std::vector<CorpusEntry> triples;
  int max_degree = 0;
};

struct CorpusLimits {
  int max_rounds = 3;
  std::size_t max_triples = 2000;
};

/// Seed pairs closed under pair and triple extension up to maxDegree, plus
/// the fixture triples within that degree. Only triples of distinct non-zero elements with
/// positive leading coefficients are kept.
Corpus build_corpus(int maxDegree, const std::vector<std::pair<Poly, Poly>>& seedPairs,
                    CorpusLimits limits = {});

/// Fixture D(1)-triples used by the corpus, including the D(5) sub-triples scaled by 1/sqrt(5).
std::vector<TripleData> fixture_triples();

struct Counterexample {
  std::vector<Poly> elems;
  long n = 1;
  /// deg d >= (3 beta + 5 gamma)/2 for intersection hits; false for clique hits.
  bool delta_bound = false;
  std::string note;
};

struct SearchReport {
  std::string kind;  // "theorem", "zx-nonsquare", "zx-square"
  long n = 1;
  int max_degree = 0;
  int coef_bound = 0;
  int max_index = 0;
  std::size_t candidates = 0;
  std::size_t pair_tests = 0;
  std::size_t edges = 0;
  std::size_t intersections = 0;
  std::size_t improper = 0;
  std::size_t quadruples = 0;
  std::size_t quintuples = 0;
  std::size_t irregular = 0;
  /// Proper d that is neither d- nor d+ of its triple.
  std::size_t unexpected = 0;
  std::vector<std::vector<Poly>> found;
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0;

  bool confirmed() const { return counterexamples.empty() && irregular == 0 && unexpected == 0; }
};

SearchReport theorem_check(const Corpus& corpus, int maxIndex, Exec exec = Exec::Parallel);

/// Non-zero integer polynomials of degree <= maxDeg with coefficients in [-coefBound, coefBound].
std::vector<Poly> integer_candidates(int maxDeg, int coefBound);

/// Adjacency of the pair graph: i ~ j when p_i p_j + n is a square in Z[X].
std::vector<std::vector<char>> build_pair_graph(const std::vector<Poly>& polys, long n, Exec exec = Exec::Parallel);

/// All k-cliques (index lists, ascending) with at least one non-constant member.
std::vector<std::vector<std::size_t>> find_cliques(const std::vector<Poly>& polys,
                                                   const std::vector<std::vector<char>>& graph, std::size_t k);

inline constexpr double kPairBudget = 1e8;

/// Throws PreconditionFailed for square n and BoundsTooLarge above the budget.
SearchReport zx_nonsquare_search(long n, int maxDeg, int coefBound, Exec exec = Exec::Parallel);
/// Throws PreconditionFailed for non-square n and BoundsTooLarge above the budget.
/// `found` lists the 4-cliques; quintuples counts the 5-cliques.
SearchReport zx_square_quintuple_search(long n, int maxDeg, int coefBound, Exec exec = Exec::Parallel);

/// The same searches over an explicit list of distinct non-zero integer polynomials.
SearchReport zx_nonsquare_search(long n, std::vector<Poly> candidates, Exec exec = Exec::Parallel);
SearchReport zx_square_quintuple_search(long n, std::vector<Poly> candidates, Exec exec = Exec::Parallel);

}  // namespace dioph

#endif  // DIOPH_SEARCH_HPP
