#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abducta/types.hpp"

namespace abducta {

/// Per-activity observability annotation. Activities without an explicit
/// annotation are treated as possibly observable.
enum class Observability { Always, Never, Possibly };

enum class BlockType { Activity, Seq, Xor, And, Or, Loop };

/// A node of a block-structured process model. Every leaf is an activity;
/// Seq/Xor/And/Or carry >= 2 children, Loop exactly one (its body, executed
/// at least once).
struct Block {
  BlockType type = BlockType::Activity;
  ActivityId name;              // Activity leaves only
  std::vector<Block> children;  // composites only
};

Block activity(ActivityId name);
Block seq(std::vector<Block> children);
Block xor_of(std::vector<Block> children);
Block and_of(std::vector<Block> children);
Block or_of(std::vector<Block> children);
Block loop(Block body);

struct ProcessModel {
  Block root;
  std::map<ActivityId, Observability> observability;

  Observability obs(const ActivityId& a) const;
  /// All activity names in the tree, in declaration order.
  std::vector<ActivityId> activities() const;
  bool has_activity(const ActivityId& a) const;
};

/// Builds a model and fills in Possibly for unannotated activities.
ProcessModel make_model(Block root, std::map<ActivityId, Observability> obs = {});

/// Copy of the model with every activity annotated the same way.
ProcessModel with_uniform_observability(const ProcessModel& m, Observability obs);

/// All invariant violations, or empty when the model is well formed.
/// Violations are data, not failures.
std::vector<std::string> validate(const ProcessModel& m);

using Run = std::vector<ActivityId>;

/// One resolved execution instance of a model: a set of activity occurrences
/// plus the immediate-precedence edges induced by the block structure.
/// Runs are the topological linearizations of an instance.
struct RunDag {
  std::vector<ActivityId> activities;   // node -> activity
  std::vector<std::vector<int>> preds;  // node -> immediate predecessors
  int size() const { return static_cast<int>(activities.size()); }
};

/// Enumerates every execution instance with at most max_len activity
/// occurrences, resolving xor branches, or subsets and loop unrollings in
/// declaration order. The callback returns false to stop early.
void for_each_instance(const Block& root, int max_len,
                       const std::function<bool(const RunDag&)>& fn);

/// Enumerates the topological linearizations of an instance, lowest node
/// index first. The callback returns false to stop early.
void for_each_linearization(const RunDag& dag,
                            const std::function<bool(const std::vector<int>&)>& fn);

struct EnumerateOptions {
  std::size_t run_cap = 1'000'000;
};

/// The exact set of runs of length <= max_len, duplicate-free.
/// Throws CapExceeded when the run count exceeds the configured cap.
std::set<Run> enumerate_runs(const ProcessModel& m, int max_len,
                             const EnumerateOptions& opts = {});

}  // namespace abducta
