#include "dioph/tuples.hpp"

#include <algorithm>

#include "dioph/error.hpp"

namespace dioph {

struct TupleBuilder {
  static DTuple make(std::vector<Poly> elems, long n, std::vector<std::vector<Poly>> witnesses) {
    DTuple t;
    t.elems_ = std::move(elems);
    t.n_ = n;
    t.witnesses_ = std::move(witnesses);
    return t;
  }
};

const Poly& DTuple::witness(std::size_t i, std::size_t j) const {
  if (i == j || i >= elems_.size() || j >= elems_.size())
    throw Error(Errc::InvalidTuple, "witness index out of range");
  if (i > j) std::swap(i, j);
  return witnesses_[i][j - i - 1];
}

Poly constant_like(const Poly& like, long n) { return Poly(FieldElem(n, like.spec())); }

void sort_elements(std::vector<Poly>& elems) {
  if (elems.empty() || !elems.front().spec().real_embeddable()) return;
  std::stable_sort(elems.begin(), elems.end(), poly_less);
}

VerifyResult verify_tuple(std::vector<Poly> elems, long n) {
  if (elems.empty()) throw Error(Errc::InvalidTuple, "empty tuple");
  if (n == 0) throw Error(Errc::InvalidTuple, "n must be non-zero");
  const FieldSpec spec = elems.front().spec();
  for (const auto& e : elems) {
    if (!(e.spec() == spec)) throw Error(Errc::MixedFields, spec.name() + " vs " + e.spec().name());
    if (e.is_zero()) throw Error(Errc::InvalidTuple, "tuple elements must be non-zero");
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (elems[i] == elems[j]) throw Error(Errc::InvalidTuple, "repeated element " + render(elems[i]));

  sort_elements(elems);
  VerifyResult out;
  const Poly np = constant_like(elems.front(), n);
  std::vector<std::vector<Poly>> witnesses(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Poly value = elems[i] * elems[j] + np;
      auto root = poly_sqrt(value);
      if (!root) {
        out.report.failures.push_back({i, j, std::move(value)});
        continue;
      }
      witnesses[i].push_back(std::move(*root));
    }
  }

  const auto constants =
      std::count_if(elems.begin(), elems.end(), [](const Poly& p) { return p.is_constant(); });
  if (constants > 1 && static_cast<std::size_t>(constants) < elems.size())
    out.report.warnings.push_back("more than one constant element alongside non-constant ones");

  out.report.ok = out.report.failures.empty();
  if (out.report.ok) out.tuple = TupleBuilder::make(elems, n, std::move(witnesses));
  out.sorted = std::move(elems);
  return out;
}

Witnesses triple_witnesses(const DTuple& triple) {
  if (triple.size() != 3) throw Error(Errc::WrongArity, "expected a triple");
  return {triple.witness(0, 1), triple.witness(0, 2), triple.witness(1, 2)};
}

bool regular_triple_identity(const Poly& a, const Poly& b, const Poly& c, long n) {
  Poly lhs = c - b - a;
  return lhs * lhs == Poly(FieldElem(4, a.spec())) * (a * b + constant_like(a, n));
}

bool regular_quadruple_identity(const Poly& a, const Poly& b, const Poly& c, const Poly& d, long n) {
  const Poly np = constant_like(a, n);
  Poly diff = d + c - a - b;
  return np * diff * diff == Poly(FieldElem(4, a.spec())) * (a * b + np) * (c * d + np);
}

bool regular_quadruple_any_split(const Poly& a, const Poly& b, const Poly& c, const Poly& d, long n) {
  return regular_quadruple_identity(a, b, c, d, n) || regular_quadruple_identity(a, c, b, d, n) ||
         regular_quadruple_identity(a, d, b, c, n);
}

bool is_regular_triple(const DTuple& triple) {
  if (triple.size() != 3) throw Error(Errc::WrongArity, "expected a triple");
  return regular_triple_identity(triple[0], triple[1], triple[2], triple.n());
}

bool is_regular_quadruple(const DTuple& quad) {
  if (quad.size() != 4) throw Error(Errc::WrongArity, "expected a quadruple");
  return regular_quadruple_any_split(quad[0], quad[1], quad[2], quad[3], quad.n());
}

}  // namespace dioph
