#ifndef DIOPH_EXTEND_HPP
#define DIOPH_EXTEND_HPP

#include <optional>
#include <string>
#include <vector>

#include "dioph/tuples.hpp"

namespace dioph {

struct PairExtension {
  Poly r;
  Poly c_plus;   // a + b + 2r
  Poly c_minus;  // a + b - 2r
};

/// Both regular third elements of a D(n)-pair. Throws NotADPair.
PairExtension extend_pair(const Poly& a, const Poly& b, long n);

/// {a, b, a + b + 2r, 4r(a + r)(b + r)} for a D(1)-pair.
DTuple pair_regular_quadruple(const Poly& a, const Poly& b);

/// One root d of the regular-quadruple equation over a triple, with the
/// companion square roots u = at +- rs, v = bs +- rt, w = cr +- st.
struct RootExtension {
  Poly d;
  Poly u;
  Poly v;
  Poly w;
  /// d is non-zero and differs from a, b and c.
  bool proper = false;
  /// {a, b, c, d} as a verified D(n)-quadruple, when it is one.
  std::optional<DTuple> quadruple;
};

enum class TripleClass { L4_1, L4_2a, L4_2b, L4_3a, L4_3b, L4_3c, L4_3d, Unclassified };

std::string to_string(TripleClass c);

struct TripleData {
  DTuple triple;
  Poly a, b, c;
  Poly r, s, t;
  int alpha = 0, beta = 0, gamma = 0;
  RootExtension plus;
  RootExtension minus;
  /// False when a, b, c have integer coefficients but some d does not.
  bool integral_roots = true;

  long n() const noexcept { return triple.n(); }
  const Poly& d_plus() const noexcept { return plus.d; }
  const Poly& d_minus() const noexcept { return minus.d; }
};

/// Computes d+- = a + b + c + (2/n)(abc +- rst) and checks the companion
/// identities exactly; any failure raises IdentityViolation.
TripleData extend_triple(const DTuple& triple);
/// Verifies first; throws NotADTriple when the elements are not a D(n)-triple.
TripleData extend_triple(std::vector<Poly> elems, long n);

struct Check {
  std::string name;
  bool ok;
};

struct Classification {
  TripleClass primary = TripleClass::Unclassified;
  /// Every admissible label, in case order; primary is the first.
  std::vector<TripleClass> labels;
  std::vector<Check> checks;
  int d_minus_degree = -1;  // -1 when d- = 0

  bool checks_pass() const;
};

/// Gap-principle classification of a D(1)-triple with 0 < a < b < c.
Classification classify_triple(const TripleData& data);

/// a = (1 - p^2) / (2p) for a rational 0 < p < 1.
mpq_class family_2a_first(const mpq_class& p);
/// An element b with ab + 1 = root^2 for the family constant a.
Poly family_2a_partner(const mpq_class& p, const Poly& root);
/// {a, b, b/p^2 + 2/p} with d- = a. Throws PreconditionFailed if ab + 1 is not a square.
TripleData gen_2a_family(const mpq_class& p, const Poly& b);

enum class Lemma6Branch { Regular, Family2aUpper, Family2aLower };

struct Lemma6Form {
  DTuple quadruple;
  Poly d_minus;
  Poly c;
  /// beta < gamma = alpha + 2 beta for the triple {a, b, c}.
  bool degree_window = false;
};

/// The quadruple {a, b, d-, c} of the given shape. `upper` selects the sign
/// combination for the Regular branch. Throws PreconditionFailed.
Lemma6Form lemma6_forms(const Poly& a, const Poly& b, Lemma6Branch branch, bool upper = true);

}  // namespace dioph

#endif  // DIOPH_EXTEND_HPP
