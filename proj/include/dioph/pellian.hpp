#ifndef DIOPH_PELLIAN_HPP
#define DIOPH_PELLIAN_HPP

// Simultaneous Pellian equations attached to a D(1)-triple {a, b, c}:
//   A: a z^2 - c x^2 = a - c,    B: b z^2 - c y^2 = b - c,
// their solution orbits under s + sqrt(ac) and t + sqrt(bc), and the
// intersections v_m = w_n of the resulting binary recurrences.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "dioph/extend.hpp"

namespace dioph {

enum class Exec { Serial, Parallel };

enum class PellEquation { A, B };

struct PellContext {
  PellEquation tag;
  Poly first;   // a (A) or b (B)
  Poly c;
  Poly unit;    // s (A) or t (B): unit^2 = first * c + 1
  int first_degree;
  int gamma;
};

/// Throws PreconditionFailed unless the triple is a D(1)-triple.
PellContext make_context(const TripleData& triple, PellEquation tag);

struct PellSolution {
  Poly z;
  Poly x;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

bool is_solution(const PellContext& ctx, const PellSolution& sol);
/// Multiplication by unit + sqrt(first * c).
PellSolution forward_step(const PellContext& ctx, const PellSolution& sol);
/// Multiplication by unit - sqrt(first * c).
PellSolution backward_step(const PellContext& ctx, const PellSolution& sol);
/// Initial-solution degree bounds: 4 deg z <= 3 gamma - deg(first), 4 deg x <= deg(first) + gamma.
bool within_initial_bounds(const PellContext& ctx, const PellSolution& sol);

struct Reduction {
  PellSolution initial;
  int exponent = 0;
  bool within_bounds = false;
};

/// Descends (z, x) while the maximal degree strictly drops, then across one
/// equal-degree step if there is one. Throws NotASolution.
Reduction reduce_solution(const Poly& z, const Poly& x, const PellContext& ctx);

/// The element of the orbit of `sol` with the smallest maximal degree (the
/// lower one of a tie): the fixed point reduce_solution returns for every
/// solution forward of it.
PellSolution orbit_minimum(const PellContext& ctx, const PellSolution& sol);

struct InitialData {
  Poly z0, x0, d0;  // equation A: c d0 + 1 = z0^2, a d0 + 1 = x0^2
  Poly z1, y1, d1;  // equation B: c d1 + 1 = z1^2, b d1 + 1 = y1^2
  std::string label0;  // catalog origin of z0, e.g. "-1", "+t", "-(cr-st)"
  std::string label1;
};

struct InitialCandidate {
  PellEquation tag;
  std::string label;
  Poly z;
  bool accepted;
  std::string reason;
};

struct InitialCatalog {
  std::vector<InitialData> initials;
  std::vector<InitialCandidate> trace;
};

/// Candidate initial terms z in {+-1, +-s, +-t, +-(cr - st)} filtered by
/// divisibility, squareness of the co-solution and the degree bounds.
InitialCatalog enumerate_initials(const TripleData& triple);

struct SeqIntersection {
  int m;
  int n;
  Poly z;
  Poly d;
};

/// The two recurrences (v_m) and (w_n) with their Pell co-sequences (x_m) and (y_n).
class RecurrencePair {
 public:
  RecurrencePair(std::shared_ptr<const TripleData> triple, InitialData initials);

  const TripleData& triple() const noexcept { return *triple_; }
  const InitialData& initials() const noexcept { return initials_; }
  const std::vector<Poly>& v() const noexcept { return v_; }
  const std::vector<Poly>& x() const noexcept { return x_; }
  const std::vector<Poly>& w() const noexcept { return w_; }
  const std::vector<Poly>& y() const noexcept { return y_; }
  /// Non-fatal observations, e.g. deg(v_1) outside its expected window.
  const std::vector<std::string>& flags() const noexcept { return flags_; }
  const std::vector<SeqIntersection>& intersections() const noexcept { return intersections_; }

  /// Highest index present in both sequences.
  int max_index() const noexcept { return static_cast<int>(std::min(v_.size(), w_.size())) - 1; }

 private:
  friend RecurrencePair advance(RecurrencePair seq, int steps, bool strict);
  friend std::vector<SeqIntersection> find_intersections(RecurrencePair& seq);

  std::shared_ptr<const TripleData> triple_;
  InitialData initials_;
  std::vector<Poly> v_, x_, w_, y_;
  std::vector<std::string> flags_;
  std::vector<SeqIntersection> intersections_;
};

/// Extends both sequences by `steps` terms and checks
/// deg(v_m) = (m - 1)(alpha + gamma)/2 + deg(v_1) (and the analogue for w).
/// With `strict`, a violation throws DegreeLawViolation; otherwise it is flagged.
RecurrencePair advance(RecurrencePair seq, int steps, bool strict = true);

/// Records every exact equality v_m = w_n up to the current length.
std::vector<SeqIntersection> find_intersections(RecurrencePair& seq);

struct CongruenceRecord {
  std::string law;  // "L5", "L8" or "2rst"
  char sequence;    // 'v', 'w', or '-' for the triple congruence
  int index;
  bool pass;
};

struct CongruenceReport {
  std::vector<CongruenceRecord> records;
  bool all_pass() const;
};

/// Congruences mod c and mod c^2 at every index <= upTo, plus 2rst = a + b - d- (mod c).
CongruenceReport check_congruences(const RecurrencePair& seq, int upTo);

enum class DKind { Zero, DMinus, DPlus, Element, Other };
std::string to_string(DKind k);

struct IntersectionRecord {
  InitialData initials;
  int m;
  int n;
  Poly z;
  Poly d;
  DKind kind;
  /// ad + 1, bd + 1, cd + 1 are all squares.
  bool squares;
  /// d is non-zero and not an element of the triple.
  bool proper;
  bool regular;
};

/// Every v_m = w_n with m, n <= maxIndex over all enumerated initial data, in
/// (initial data, m, n) order. maxIndex must be at least 3.
std::vector<IntersectionRecord> intersect(const TripleData& triple, int maxIndex, Exec exec = Exec::Parallel);

}  // namespace dioph

#endif  // DIOPH_PELLIAN_HPP
