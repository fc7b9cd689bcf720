#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abducta/types.hpp"

namespace abducta {

struct TimeAtom {
  TimeTerm left;
  TimeTerm right;  // relation: left > right (strict)
};

/// A store of ground bindings and strict inequalities over natural-number
/// time terms. Satisfiability is decided on the induced difference-constraint
/// system (x > y as x - y >= 1, bindings as equalities, all variables >= 0).
///
/// Stores are value-like: copy to branch a search, or use checkpoints to
/// backtrack in place. Inconsistency is definitive for a given set of facts.
class TimeStore {
 public:
  enum class Result { Ok, Inconsistent };

  int fresh_var();
  void ensure_var(int var);
  int var_count() const { return var_count_; }

  Result assert_atom(const TimeAtom& atom);
  Result assert_greater(TimeTerm left, TimeTerm right);
  Result assert_binding(int var, TimePoint value);

  bool consistent() const;

  /// Minimal solution: each variable at its least feasible value.
  /// Deterministic; nullopt when inconsistent.
  std::optional<std::vector<TimePoint>> solve() const;

  std::optional<TimePoint> lower_bound(int var) const;
  /// Largest feasible value, or nullopt when unbounded above (or the store
  /// is inconsistent).
  std::optional<TimePoint> upper_bound(int var) const;

  /// True when every solution satisfies left > right.
  bool implies_greater(TimeTerm left, TimeTerm right) const;

  struct Checkpoint {
    std::size_t edges;
    int vars;
    std::size_t atoms;
    std::size_t bindings;
  };
  Checkpoint checkpoint() const;
  void rollback(const Checkpoint& cp);

  /// Atoms asserted so far (bindings excluded), for reports and tests.
  const std::vector<TimeAtom>& atoms() const { return atoms_; }
  const std::vector<std::pair<int, TimePoint>>& bindings() const { return bindings_; }

 private:
  struct Edge {
    int from;  // node index; 0 is the origin, var v is node v + 1
    int to;
    TimePoint weight;  // value(to) >= value(from) + weight
  };

  // Asserts a >= b + w over time terms, folding constants through the origin.
  Result add_ge(TimeTerm a, TimeTerm b, TimePoint w);
  void recompute() const;

  int var_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<TimeAtom> atoms_;
  std::vector<std::pair<int, TimePoint>> bindings_;

  mutable bool dirty_ = true;
  mutable bool consistent_ = true;
  mutable std::vector<TimePoint> dist_;      // longest path origin -> node
  mutable std::vector<TimePoint> rev_dist_;  // longest path node -> origin
  mutable std::vector<bool> rev_reach_;
};

}  // namespace abducta
