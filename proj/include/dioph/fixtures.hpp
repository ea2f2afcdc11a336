#ifndef DIOPH_FIXTURES_HPP
#define DIOPH_FIXTURES_HPP

#include <string>
#include <vector>

#include "dioph/extend.hpp"

namespace dioph {

struct NamedTriple {
  std::string name;
  std::vector<std::string> elems;
  long n;
  std::string d_minus;   // expected d-, parsed in the triple's field
  TripleClass expected;  // Unclassified when no class is asserted
};

/// The worked examples: D(1)-triples with their known d-.
const std::vector<NamedTriple>& named_triples();

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs every worked example and reports one line per check.
std::vector<FixtureResult> run_fixtures();

/// The triples of named_triples() plus the D(5) sub-triples scaled by 1/sqrt(5), as D(1)-triples.
std::vector<TripleData> fixture_triples();

/// {X, 4X + 4 sqrt(5), 9X + 6 sqrt(5), 144/5 X^3 + 48 sqrt(5) X^2 + 124 X + 20 sqrt(5)}.
std::vector<Poly> d5_quadruple();

}  // namespace dioph

#endif  // DIOPH_FIXTURES_HPP
