#include "abducta/model.hpp"

#include <algorithm>

namespace abducta {

Block activity(ActivityId name) {
  Block b;
  b.type = BlockType::Activity;
  b.name = std::move(name);
  return b;
}

static Block composite(BlockType t, std::vector<Block> children) {
  Block b;
  b.type = t;
  b.children = std::move(children);
  return b;
}

Block seq(std::vector<Block> children) { return composite(BlockType::Seq, std::move(children)); }
Block xor_of(std::vector<Block> children) { return composite(BlockType::Xor, std::move(children)); }
Block and_of(std::vector<Block> children) { return composite(BlockType::And, std::move(children)); }
Block or_of(std::vector<Block> children) { return composite(BlockType::Or, std::move(children)); }

Block loop(Block body) {
  Block b;
  b.type = BlockType::Loop;
  b.children.push_back(std::move(body));
  return b;
}

static void collect_activities(const Block& b, std::vector<ActivityId>& out) {
  if (b.type == BlockType::Activity) {
    out.push_back(b.name);
    return;
  }
  for (const Block& c : b.children) collect_activities(c, out);
}

Observability ProcessModel::obs(const ActivityId& a) const {
  auto it = observability.find(a);
  return it == observability.end() ? Observability::Possibly : it->second;
}

std::vector<ActivityId> ProcessModel::activities() const {
  std::vector<ActivityId> out;
  collect_activities(root, out);
  return out;
}

bool ProcessModel::has_activity(const ActivityId& a) const {
  auto acts = activities();
  return std::find(acts.begin(), acts.end(), a) != acts.end();
}

ProcessModel make_model(Block root, std::map<ActivityId, Observability> obs) {
  ProcessModel m;
  m.root = std::move(root);
  m.observability = std::move(obs);
  for (const ActivityId& a : m.activities()) {
    m.observability.emplace(a, Observability::Possibly);
  }
  return m;
}

ProcessModel with_uniform_observability(const ProcessModel& m, Observability obs) {
  ProcessModel out = m;
  for (auto& [act, o] : out.observability) o = obs;
  return out;
}

static void validate_block(const Block& b, std::vector<std::string>& out) {
  switch (b.type) {
    case BlockType::Activity:
      if (b.name.empty()) out.push_back("activity with empty name");
      if (!b.children.empty()) out.push_back("activity block must not have children");
      break;
    case BlockType::Loop:
      if (b.children.size() != 1)
        out.push_back("loop must have exactly one body block");
      break;
    default:
      if (b.children.size() < 2) {
        const char* kind = b.type == BlockType::Seq   ? "seq"
                           : b.type == BlockType::Xor ? "xor"
                           : b.type == BlockType::And ? "and"
                                                      : "or";
        out.push_back(std::string(kind) + " block needs at least 2 branches, has " +
                      std::to_string(b.children.size()));
      }
      break;
  }
  for (const Block& c : b.children) validate_block(c, out);
}

std::vector<std::string> validate(const ProcessModel& m) {
  std::vector<std::string> out;
  validate_block(m.root, out);

  std::set<ActivityId> seen;
  for (const ActivityId& a : m.activities()) {
    if (!seen.insert(a).second) out.push_back("duplicate activity name: " + a);
    if (m.observability.find(a) == m.observability.end())
      out.push_back("missing observability entry for activity: " + a);
  }
  return out;
}

namespace {

// Builds instances depth-first. A block resolution appends nodes to the dag
// under construction; continuations receive the exit-node set of the fragment
// just built and are undone by truncating the node list afterwards.
class InstanceEnumerator {
 public:
  InstanceEnumerator(int max_len, const std::function<bool(const RunDag&)>& fn)
      : max_len_(max_len), fn_(fn) {}

  void run(const Block& root) {
    expand(root, {}, [&](const std::vector<int>&) {
      if (!fn_(dag_)) stopped_ = true;
    });
  }

 private:
  using Cont = std::function<void(const std::vector<int>&)>;

  void expand(const Block& b, const std::vector<int>& entry_preds, const Cont& k) {
    if (stopped_) return;
    switch (b.type) {
      case BlockType::Activity: {
        if (dag_.size() >= max_len_) return;  // length budget
        dag_.activities.push_back(b.name);
        dag_.preds.push_back(entry_preds);
        std::vector<int> exits{dag_.size() - 1};
        k(exits);
        dag_.activities.pop_back();
        dag_.preds.pop_back();
        return;
      }
      case BlockType::Seq:
        expand_seq(b.children, 0, entry_preds, k);
        return;
      case BlockType::Xor:
        for (const Block& c : b.children) {
          expand(c, entry_preds, k);
          if (stopped_) return;
        }
        return;
      case BlockType::And:
        expand_parallel(b.children, all_indices(b.children.size()), entry_preds, k);
        return;
      case BlockType::Or: {
        auto subsets = nonempty_subsets(b.children.size());
        for (const auto& s : subsets) {
          expand_parallel(b.children, s, entry_preds, k);
          if (stopped_) return;
        }
        return;
      }
      case BlockType::Loop:
        expand_loop_iteration(b.children.front(), entry_preds, k);
        return;
    }
  }

  void expand_seq(const std::vector<Block>& cs, std::size_t i,
                  const std::vector<int>& entry_preds, const Cont& k) {
    if (i + 1 == cs.size()) {
      expand(cs[i], entry_preds, k);
      return;
    }
    expand(cs[i], entry_preds, [&, i](const std::vector<int>& exits) {
      expand_seq(cs, i + 1, exits, k);
    });
  }

  // Branches share the entry predecessors (split) and the continuation sees
  // the union of their exits (join).
  void expand_parallel(const std::vector<Block>& cs, const std::vector<std::size_t>& picks,
                       const std::vector<int>& entry_preds, const Cont& k) {
    std::vector<int> exits_acc;
    parallel_step(cs, picks, 0, entry_preds, exits_acc, k);
  }

  void parallel_step(const std::vector<Block>& cs, const std::vector<std::size_t>& picks,
                     std::size_t i, const std::vector<int>& entry_preds,
                     std::vector<int>& exits_acc, const Cont& k) {
    if (i == picks.size()) {
      k(exits_acc);
      return;
    }
    expand(cs[picks[i]], entry_preds, [&, i](const std::vector<int>& exits) {
      std::size_t before = exits_acc.size();
      exits_acc.insert(exits_acc.end(), exits.begin(), exits.end());
      parallel_step(cs, picks, i + 1, entry_preds, exits_acc, k);
      exits_acc.resize(before);
    });
  }

  // Do-while: one iteration, then either proceed or iterate again with the
  // previous exits as entry predecessors. Lower iteration counts come first.
  void expand_loop_iteration(const Block& body, const std::vector<int>& entry_preds,
                             const Cont& k) {
    expand(body, entry_preds, [&](const std::vector<int>& exits) {
      k(exits);
      if (!stopped_) expand_loop_iteration(body, exits, k);
    });
  }

  static std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
  }

  // Non-empty subsets ordered by size, then lexicographically by indices.
  static std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  int max_len_;
  const std::function<bool(const RunDag&)>& fn_;
  RunDag dag_;
  bool stopped_ = false;
};

}  // namespace

void for_each_instance(const Block& root, int max_len,
                       const std::function<bool(const RunDag&)>& fn) {
  if (max_len < 1) return;
  InstanceEnumerator e(max_len, fn);
  e.run(root);
}

namespace {

class LinearizationEnumerator {
 public:
  LinearizationEnumerator(const RunDag& dag,
                          const std::function<bool(const std::vector<int>&)>& fn)
      : dag_(dag), fn_(fn), indegree_(dag.size(), 0), placed_(dag.size(), false) {
    for (int v = 0; v < dag.size(); ++v)
      indegree_[v] = static_cast<int>(dag.preds[v].size());
    succs_.resize(dag.size());
    for (int v = 0; v < dag.size(); ++v)
      for (int p : dag.preds[v]) succs_[p].push_back(v);
  }

  void run() { step(); }

 private:
  void step() {
    if (stopped_) return;
    if (static_cast<int>(order_.size()) == dag_.size()) {
      if (!fn_(order_)) stopped_ = true;
      return;
    }
    for (int v = 0; v < dag_.size(); ++v) {
      if (placed_[v] || indegree_[v] != 0) continue;
      placed_[v] = true;
      order_.push_back(v);
      for (int s : succs_[v]) --indegree_[s];
      step();
      for (int s : succs_[v]) ++indegree_[s];
      order_.pop_back();
      placed_[v] = false;
      if (stopped_) return;
    }
  }

  const RunDag& dag_;
  const std::function<bool(const std::vector<int>&)>& fn_;
  std::vector<int> indegree_;
  std::vector<bool> placed_;
  std::vector<std::vector<int>> succs_;
  std::vector<int> order_;
  bool stopped_ = false;
};

}  // namespace

void for_each_linearization(const RunDag& dag,
                            const std::function<bool(const std::vector<int>&)>& fn) {
  LinearizationEnumerator e(dag, fn);
  e.run();
}

std::set<Run> enumerate_runs(const ProcessModel& m, int max_len, const EnumerateOptions& opts) {
  std::set<Run> runs;
  for_each_instance(m.root, max_len, [&](const RunDag& dag) {
    bool ok = true;
    for_each_linearization(dag, [&](const std::vector<int>& order) {
      Run r;
      r.reserve(order.size());
      for (int v : order) r.push_back(dag.activities[v]);
      runs.insert(std::move(r));
      if (runs.size() > opts.run_cap) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  });
  if (runs.size() > opts.run_cap)
    throw CapExceeded("run enumeration exceeded cap of " + std::to_string(opts.run_cap));
  return runs;
}

}  // namespace abducta
