#include "dioph/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "dioph/error.hpp"
#include "dioph/fixtures.hpp"

namespace dioph {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PairChain: return "pair-chain";
    case Provenance::Family2a: return "2a-family";
    case Provenance::PaperFixture: return "paper-fixture";
  }
  return "pair-chain";
}

namespace {

std::string tuple_key(std::vector<Poly> elems) {
  sort_elements(elems);
  std::string key = elems.front().spec().name();
  for (const auto& e : elems) key += "|" + render(e);
  return key;
}

bool admissible(const std::vector<Poly>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero() || lead_sign(elems[i]) != Sign::Positive) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (elems[i] == elems[j]) return false;
  }
  return true;
}

int max_deg(const std::vector<Poly>& elems) {
  int d = 0;
  for (const auto& e : elems) d = std::max(d, e.degree().value_or(0));
  return d;
}

class CorpusBuilder {
 public:
  CorpusBuilder(int maxDegree, CorpusLimits limits) : limits_(limits) { corpus_.max_degree = maxDegree; }

  // Returns the index of a newly added triple, or -1.
  long add(std::vector<Poly> elems, Provenance prov, bool bounded = true) {
    if (corpus_.triples.size() >= limits_.max_triples) return -1;
    if (!admissible(elems)) return -1;
    if (bounded && max_deg(elems) > corpus_.max_degree) return -1;
    const std::string key = tuple_key(elems);
    if (keys_.count(key)) return -1;
    auto res = verify_tuple(std::move(elems), 1);
    if (!res.report.ok) return -1;
    corpus_.triples.push_back({extend_triple(*res.tuple), prov});
    keys_[key] = static_cast<long>(corpus_.triples.size()) - 1;
    return keys_[key];
  }

  void add(TripleData data, Provenance prov) {
    const std::string key = tuple_key(data.triple.elems());
    if (keys_.count(key)) return;
    corpus_.triples.push_back({std::move(data), prov});
    keys_[key] = static_cast<long>(corpus_.triples.size()) - 1;
  }

  // Index of an already present triple, or -1.
  long find(const std::vector<Poly>& elems) const {
    if (!admissible(elems)) return -1;
    const auto it = keys_.find(tuple_key(elems));
    return it == keys_.end() ? -1 : it->second;
  }

  // Pair extensions of every pair and triple extensions of the triple at `index`.
  std::vector<long> grow(std::size_t index) {
    std::vector<long> added;
    const TripleData data = corpus_.triples[index].data;
    const Provenance prov = corpus_.triples[index].provenance == Provenance::PaperFixture
                                ? Provenance::PairChain
                                : corpus_.triples[index].provenance;
    const std::vector<Poly> e = {data.a, data.b, data.c};
    auto push = [&](long i) {
      if (i >= 0) added.push_back(i);
    };
    for (const RootExtension* ext : {&data.minus, &data.plus}) {
      if (!ext->proper || !ext->quadruple) continue;
      for (std::size_t skip = 0; skip < 3; ++skip) {
        std::vector<Poly> t;
        for (std::size_t i = 0; i < 3; ++i)
          if (i != skip) t.push_back(e[i]);
        t.push_back(ext->d);
        push(add(std::move(t), prov));
      }
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) seed(e[i], e[j], prov, added);
    return added;
  }

  // With `revisit`, a triple that is already present (a fixture) is grown as well.
  void seed(const Poly& a, const Poly& b, Provenance prov, std::vector<long>& added, bool revisit = false) {
    const PairExtension ext = extend_pair(a, b, 1);
    for (const Poly* c : {&ext.c_minus, &ext.c_plus}) {
      long i = revisit ? find({a, b, *c}) : -1;
      if (i < 0) i = add({a, b, *c}, prov);
      if (i >= 0 && std::find(added.begin(), added.end(), i) == added.end()) added.push_back(i);
    }
  }

  Corpus take() { return std::move(corpus_); }
  const CorpusLimits& limits() const { return limits_; }

 private:
  CorpusLimits limits_;
  Corpus corpus_;
  std::map<std::string, long> keys_;
};

}  // namespace

Corpus build_corpus(int maxDegree, const std::vector<std::pair<Poly, Poly>>& seedPairs, CorpusLimits limits) {
  if (maxDegree < 0) throw Error(Errc::PreconditionFailed, "maxDegree must be non-negative");
  CorpusBuilder builder(maxDegree, limits);
  for (TripleData& t : fixture_triples())
    if (t.gamma <= maxDegree) builder.add(std::move(t), Provenance::PaperFixture);

  std::vector<long> frontier;
  for (const auto& [a, b] : seedPairs) {
    if (a.is_zero() || b.is_zero() || a == b) continue;
    if (!poly_sqrt(a * b + constant_like(a, 1))) continue;
    builder.seed(a, b, Provenance::PairChain, frontier, true);
  }
  if (maxDegree >= 1) {
    const Poly x = Poly::x();
    const Poly one = constant_like(x, 1);
    for (const mpq_class& p : {mpq_class(1, 2), mpq_class(1, 3), mpq_class(1, 5)}) {
      for (const Poly& root : {x + one, Poly(FieldElem(2L, x.spec())) * x + one, x * x + x + one}) {
        const Poly b = family_2a_partner(p, root);
        if (b.deg() > maxDegree) continue;
        const TripleData t = gen_2a_family(p, b);
        const long i = builder.add({t.a, t.b, t.c}, Provenance::Family2a);
        if (i >= 0) frontier.push_back(i);
      }
    }
  }
  for (int round = 0; round < builder.limits().max_rounds && !frontier.empty(); ++round) {
    std::vector<long> next;
    for (long i : frontier) {
      auto added = builder.grow(static_cast<std::size_t>(i));
      next.insert(next.end(), added.begin(), added.end());
    }
    frontier = std::move(next);
  }
  return builder.take();
}

namespace {

SearchReport check_one(const TripleData& t, int maxIndex) {
  SearchReport part;
  for (const auto& rec : intersect(t, maxIndex, Exec::Serial)) {
    ++part.intersections;
    if (!rec.squares || !rec.proper) {
      ++part.improper;
      continue;
    }
    ++part.quadruples;
    const bool expected = rec.kind == DKind::DMinus || rec.kind == DKind::DPlus;
    std::vector<Poly> quad = {t.a, t.b, t.c, rec.d};
    if (!rec.regular || !expected) {
      Counterexample ce{quad, 1, false, ""};
      ce.delta_bound = 2 * rec.d.degree().value_or(0) >= 3 * t.beta + 5 * t.gamma;
      if (!rec.regular) {
        ++part.irregular;
        ce.note = "irregular quadruple";
      } else {
        ++part.unexpected;
        ce.note = "d is neither d- nor d+";
      }
      part.counterexamples.push_back(std::move(ce));
    }
    part.found.push_back(std::move(quad));
  }
  return part;
}

}  // namespace

SearchReport theorem_check(const Corpus& corpus, int maxIndex, Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "theorem";
  report.max_degree = corpus.max_degree;
  report.max_index = maxIndex;
  report.candidates = corpus.triples.size();
  std::vector<SearchReport> parts(corpus.triples.size());
  const long count = static_cast<long>(corpus.triples.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      parts[static_cast<std::size_t>(i)] = check_one(corpus.triples[static_cast<std::size_t>(i)].data, maxIndex);
  } else {
    for (long i = 0; i < count; ++i)
      parts[static_cast<std::size_t>(i)] = check_one(corpus.triples[static_cast<std::size_t>(i)].data, maxIndex);
  }
  std::set<std::string> seen;
  for (auto& p : parts) {
    report.intersections += p.intersections;
    report.improper += p.improper;
    report.quadruples += p.quadruples;
    report.irregular += p.irregular;
    report.unexpected += p.unexpected;
    for (auto& q : p.found)
      if (seen.insert(tuple_key(q)).second) report.found.push_back(std::move(q));
    for (auto& c : p.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Poly> integer_candidates(int maxDeg, int coefBound) {
  if (maxDeg < 0 || coefBound < 0) throw Error(Errc::PreconditionFailed, "bounds must be non-negative");
  const double total = std::pow(2.0 * coefBound + 1, maxDeg + 1);
  if (total > 1e7) throw Error(Errc::BoundsTooLarge, "too many candidate polynomials");
  const long base = 2L * coefBound + 1;
  std::vector<Poly> out;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(maxDeg) + 1);
  for (long idx = 0; idx < static_cast<long>(total); ++idx) {
    long rest = idx;
    for (auto& c : coeffs) {
      c = rest % base - coefBound;
      rest /= base;
    }
    Poly p = Poly::from_rationals(coeffs);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool integral_square(const Poly& f) {
  if (f.is_zero()) return true;
  if (*f.degree() % 2 != 0) return false;
  if (!rational_sqrt(f.lead().rational_part())) return false;
  if (!rational_sqrt(f.coeff(0).rational_part())) return false;
  auto root = poly_sqrt(f);
  return root && root->is_integral();
}

}  // namespace

std::vector<std::vector<char>> build_pair_graph(const std::vector<Poly>& polys, long n, Exec exec) {
  const std::size_t count = polys.size();
  std::vector<std::vector<char>> graph(count, std::vector<char>(count, 0));
  const Poly shift(FieldElem(n, FieldSpec::rational()));
  auto row = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const char ok = integral_square(polys[i] * polys[j] + shift) ? 1 : 0;
      graph[i][j] = ok;
      graph[j][i] = ok;
    }
  };
  const long rows = static_cast<long>(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i) row(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < rows; ++i) row(static_cast<std::size_t>(i));
  }
  return graph;
}

std::vector<std::vector<std::size_t>> find_cliques(const std::vector<Poly>& polys,
                                                   const std::vector<std::vector<char>>& graph, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& cand) -> void {
    if (current.size() == k) {
      for (std::size_t i : current)
        if (!polys[i].is_constant()) {
          out.push_back(current);
          break;
        }
      return;
    }
    if (current.size() + cand.size() < k) return;
    for (std::size_t pos = 0; pos < cand.size(); ++pos) {
      const std::size_t v = cand[pos];
      std::vector<std::size_t> next;
      for (std::size_t q = pos + 1; q < cand.size(); ++q)
        if (graph[v][cand[q]]) next.push_back(cand[q]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<std::size_t> all(polys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  rec(rec, all);
  return out;
}

namespace {

bool is_perfect_square(long n) {
  if (n < 0) return false;
  const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c)
    if (c * c == n) return true;
  return false;
}

long isqrt(long n) {
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct GraphSearch {
  std::vector<Poly> polys;
  std::vector<std::vector<char>> graph;
  std::size_t pair_tests = 0;
  std::size_t edges = 0;
};

void check_budget(double count) {
  if (count * (count - 1) / 2 > kPairBudget)
    throw Error(Errc::BoundsTooLarge, "about " + std::to_string(static_cast<long long>(count * (count - 1) / 2)) +
                                          " pair tests exceed the budget");
}

GraphSearch graph_search(long n, std::vector<Poly> polys, Exec exec) {
  check_budget(static_cast<double>(polys.size()));
  for (const auto& p : polys)
    if (p.is_zero() || !p.is_integral() || !p.spec().is_rational())
      throw Error(Errc::PreconditionFailed, "candidates must be non-zero integer polynomials");
  GraphSearch g;
  g.polys = std::move(polys);
  g.graph = build_pair_graph(g.polys, n, exec);
  g.pair_tests = g.polys.empty() ? 0 : g.polys.size() * (g.polys.size() - 1) / 2;
  for (std::size_t i = 0; i < g.polys.size(); ++i)
    for (std::size_t j = i + 1; j < g.polys.size(); ++j) g.edges += g.graph[i][j] ? 1 : 0;
  return g;
}

std::vector<Poly> pick(const std::vector<Poly>& polys, const std::vector<std::size_t>& idx) {
  std::vector<Poly> out;
  for (std::size_t i : idx) out.push_back(polys[i]);
  return out;
}

SearchReport base_report(std::string kind, long n, int maxDeg, int coefBound, const GraphSearch& g) {
  SearchReport r;
  r.kind = std::move(kind);
  r.n = n;
  r.max_degree = maxDeg;
  r.coef_bound = coefBound;
  r.candidates = g.polys.size();
  r.pair_tests = g.pair_tests;
  r.edges = g.edges;
  return r;
}

SearchReport nonsquare(long n, int maxDeg, int coefBound, std::vector<Poly> polys, Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  const GraphSearch g = graph_search(n, std::move(polys), exec);
  SearchReport r = base_report("zx-nonsquare", n, maxDeg, coefBound, g);
  for (const auto& c : find_cliques(g.polys, g.graph, 4)) {
    ++r.quadruples;
    r.found.push_back(pick(g.polys, c));
    r.counterexamples.push_back({r.found.back(), n, false, "D(n)-quadruple in Z[X] for non-square n"});
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SearchReport square(long n, int maxDeg, int coefBound, std::vector<Poly> polys, Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  const GraphSearch g = graph_search(n, std::move(polys), exec);
  SearchReport r = base_report("zx-square", n, maxDeg, coefBound, g);
  const Poly inv_root(FieldElem(mpq_class(1, isqrt(n)), FieldSpec::rational()));
  for (const auto& c : find_cliques(g.polys, g.graph, 4)) {
    ++r.quadruples;
    std::vector<Poly> quad = pick(g.polys, c);
    std::vector<Poly> scaled;
    for (const auto& e : quad) scaled.push_back(e * inv_root);
    auto res = verify_tuple(scaled, 1);
    if (!res.report.ok || !is_regular_quadruple(*res.tuple)) {
      ++r.irregular;
      r.counterexamples.push_back({quad, n, false, "scaled quadruple is not a regular D(1)-quadruple"});
    }
    r.found.push_back(std::move(quad));
  }
  for (const auto& c : find_cliques(g.polys, g.graph, 5)) {
    ++r.quintuples;
    r.counterexamples.push_back({pick(g.polys, c), n, false, "D(n)-quintuple in Z[X]"});
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void require_nonsquare(long n) {
  if (n <= 0 || is_perfect_square(n)) throw Error(Errc::PreconditionFailed, "n must be a positive non-square");
}

void require_square(long n) {
  if (n <= 0 || !is_perfect_square(n)) throw Error(Errc::PreconditionFailed, "n must be a positive perfect square");
}

}  // namespace

SearchReport zx_nonsquare_search(long n, int maxDeg, int coefBound, Exec exec) {
  require_nonsquare(n);
  check_budget(std::pow(2.0 * coefBound + 1, maxDeg + 1) - 1);
  return nonsquare(n, maxDeg, coefBound, integer_candidates(maxDeg, coefBound), exec);
}

SearchReport zx_square_quintuple_search(long n, int maxDeg, int coefBound, Exec exec) {
  require_square(n);
  check_budget(std::pow(2.0 * coefBound + 1, maxDeg + 1) - 1);
  return square(n, maxDeg, coefBound, integer_candidates(maxDeg, coefBound), exec);
}

SearchReport zx_nonsquare_search(long n, std::vector<Poly> candidates, Exec exec) {
  require_nonsquare(n);
  return nonsquare(n, 0, 0, std::move(candidates), exec);
}

SearchReport zx_square_quintuple_search(long n, std::vector<Poly> candidates, Exec exec) {
  require_square(n);
  return square(n, 0, 0, std::move(candidates), exec);
}

}  // namespace dioph
