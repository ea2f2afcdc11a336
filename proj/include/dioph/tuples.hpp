#ifndef DIOPH_TUPLES_HPP
#define DIOPH_TUPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dioph/poly.hpp"

namespace dioph {

/// A verified D(n)-tuple: every product of two distinct elements plus n is a square.
/// Elements are sorted ascending when the field is ordered.
class DTuple {
 public:
  const std::vector<Poly>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Poly& operator[](std::size_t i) const { return elems_[i]; }
  long n() const noexcept { return n_; }
  const FieldSpec& spec() const noexcept { return elems_.front().spec(); }
  /// Canonical square root of elems[i] * elems[j] + n, i != j.
  const Poly& witness(std::size_t i, std::size_t j) const;

 private:
  friend struct TupleBuilder;
  DTuple() = default;

  std::vector<Poly> elems_;
  long n_ = 1;
  std::vector<std::vector<Poly>> witnesses_;  // upper triangle: witnesses_[i][j - i - 1]
};

struct PairFailure {
  std::size_t i;
  std::size_t j;
  Poly value;  // elems[i] * elems[j] + n
};

struct VerifyReport {
  bool ok = false;
  std::vector<PairFailure> failures;
  std::vector<std::string> warnings;
};

struct VerifyResult {
  VerifyReport report;
  /// Sorted working order of the elements (failure indices refer to it).
  std::vector<Poly> sorted;
  std::optional<DTuple> tuple;
};

/// Checks squareness of every pairwise product plus n. Throws MixedFields when
/// the elements live in different fields and InvalidTuple for repeated or zero elements.
VerifyResult verify_tuple(std::vector<Poly> elems, long n);

/// Sorts ascending by the leading-coefficient order when the field is ordered.
void sort_elements(std::vector<Poly>& elems);

struct Witnesses {
  Poly r;  // sqrt(ab + n)
  Poly s;  // sqrt(ac + n)
  Poly t;  // sqrt(bc + n)
};

Witnesses triple_witnesses(const DTuple& triple);

/// (c - b - a)^2 = 4(ab + n). The identity is symmetric in a, b, c.
bool regular_triple_identity(const Poly& a, const Poly& b, const Poly& c, long n);
/// n(d + c - a - b)^2 = 4(ab + n)(cd + n) for the split {a, b} | {c, d}.
bool regular_quadruple_identity(const Poly& a, const Poly& b, const Poly& c, const Poly& d, long n);
/// Any of the three {pair} | {pair} splits satisfies the quadruple identity.
bool regular_quadruple_any_split(const Poly& a, const Poly& b, const Poly& c, const Poly& d, long n);

bool is_regular_triple(const DTuple& triple);
bool is_regular_quadruple(const DTuple& quad);

/// Polynomial constant n in the field of `like`.
Poly constant_like(const Poly& like, long n);

}  // namespace dioph

#endif  // DIOPH_TUPLES_HPP
