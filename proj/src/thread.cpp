#include "isc/thread.hpp"

#include <map>
#include <queue>
#include <set>

namespace isc {

ThreadGraph terminated_thread() {
  ThreadGraph g;
  g.nodes.push_back({ThreadGraph::Node::Kind::S});
  g.entry = 0;
  return g;
}

ThreadGraph deadlock_thread() {
  ThreadGraph g;
  g.nodes.push_back({ThreadGraph::Node::Kind::D});
  g.entry = 0;
  return g;
}

ThreadGraph prefix_thread(const FocusMethod& a) {
  ThreadGraph g;
  g.nodes.push_back({ThreadGraph::Node::Kind::S});
  g.nodes.push_back({ThreadGraph::Node::Kind::Post, a, 0, 0});
  g.entry = 1;
  return g;
}

// ── extraction ──────────────────────────────────────────────────────────────

namespace {

struct Target {
  enum class Kind { S, D, Action };
  Kind kind;
  long pos = 0;  // valid for Action: 1-based instruction position
};

// Follows jump chains from pos until an action, halt, deadlock or a
// cycle is found.
Target resolve(const Program& p, long pos) {
  const long len = static_cast<long>(p.length());
  std::set<long> seen;
  for (;;) {
    if (pos < 1 || pos > len) return {Target::Kind::D};
    const Instruction& ins = p.instructions[static_cast<std::size_t>(pos - 1)];
    switch (ins.kind) {
      case Instruction::Kind::Halt:
        return {Target::Kind::S};
      case Instruction::Kind::Basic:
      case Instruction::Kind::PosTest:
      case Instruction::Kind::NegTest:
        return {Target::Kind::Action, pos};
      case Instruction::Kind::FwdJump:
        if (ins.k == 0) return {Target::Kind::D};
        if (!seen.insert(pos).second) return {Target::Kind::D};
        pos += static_cast<long>(ins.k);
        break;
      case Instruction::Kind::BwdJump:
        if (!seen.insert(pos).second) return {Target::Kind::D};
        pos -= static_cast<long>(ins.k);
        break;
    }
  }
}

}  // namespace

ThreadGraph extract(const Program& p) {
  ThreadGraph g;
  std::map<long, int> node_of_pos;
  int s_id = -1, d_id = -1;
  std::queue<long> work;

  auto node_for = [&](const Target& t) -> int {
    switch (t.kind) {
      case Target::Kind::S:
        if (s_id < 0) {
          s_id = static_cast<int>(g.nodes.size());
          g.nodes.push_back({ThreadGraph::Node::Kind::S});
        }
        return s_id;
      case Target::Kind::D:
        if (d_id < 0) {
          d_id = static_cast<int>(g.nodes.size());
          g.nodes.push_back({ThreadGraph::Node::Kind::D});
        }
        return d_id;
      case Target::Kind::Action: {
        auto it = node_of_pos.find(t.pos);
        if (it != node_of_pos.end()) return it->second;
        int id = static_cast<int>(g.nodes.size());
        const Instruction& ins =
            p.instructions[static_cast<std::size_t>(t.pos - 1)];
        g.nodes.push_back({ThreadGraph::Node::Kind::Post, ins.fm});
        node_of_pos.emplace(t.pos, id);
        work.push(t.pos);
        return id;
      }
    }
    return -1;
  };

  g.entry = node_for(resolve(p, 1));
  while (!work.empty()) {
    long pos = work.front();
    work.pop();
    int id = node_of_pos.at(pos);
    const Instruction& ins = p.instructions[static_cast<std::size_t>(pos - 1)];
    long next_t, next_f;
    switch (ins.kind) {
      case Instruction::Kind::Basic:
        next_t = next_f = pos + 1;
        break;
      case Instruction::Kind::PosTest:
        next_t = pos + 1;
        next_f = pos + 2;
        break;
      case Instruction::Kind::NegTest:
        next_t = pos + 2;
        next_f = pos + 1;
        break;
      default:
        continue;  // unreachable: only actions are queued
    }
    int t_id = node_for(resolve(p, next_t));
    int f_id = node_for(resolve(p, next_f));
    g.nodes[static_cast<std::size_t>(id)].on_true = t_id;
    g.nodes[static_cast<std::size_t>(id)].on_false = f_id;
  }
  return g;
}

// ── queries ─────────────────────────────────────────────────────────────────

namespace {

std::vector<int> reachable(const ThreadGraph& t) {
  std::vector<int> order;
  std::set<int> seen;
  std::queue<int> work;
  work.push(t.entry);
  seen.insert(t.entry);
  while (!work.empty()) {
    int id = work.front();
    work.pop();
    order.push_back(id);
    const auto& n = t.at(id);
    if (n.kind == ThreadGraph::Node::Kind::Post) {
      for (int succ : {n.on_true, n.on_false}) {
        if (seen.insert(succ).second) work.push(succ);
      }
    }
  }
  return order;
}

}  // namespace

CanonicalInterface actions_of(const ThreadGraph& t) {
  CanonicalInterface r;
  for (int id : reachable(t)) {
    const auto& n = t.at(id);
    if (n.kind == ThreadGraph::Node::Kind::Post)
      r.words.insert(Word{n.action.dotted(), false});
  }
  return r;
}

bool bisimilar(const ThreadGraph& t1, const ThreadGraph& t2) {
  const std::size_t n1 = t1.nodes.size(), n2 = t2.nodes.size();
  // related[i][j]: nodes i of t1 and j of t2 are still candidates.
  std::vector<std::vector<bool>> related(n1, std::vector<bool>(n2));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const auto& a = t1.nodes[i];
      const auto& b = t2.nodes[j];
      related[i][j] =
          a.kind == b.kind &&
          (a.kind != ThreadGraph::Node::Kind::Post || a.action == b.action);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        if (!related[i][j]) continue;
        const auto& a = t1.nodes[i];
        if (a.kind != ThreadGraph::Node::Kind::Post) continue;
        const auto& b = t2.nodes[j];
        if (!related[static_cast<std::size_t>(a.on_true)]
                    [static_cast<std::size_t>(b.on_true)] ||
            !related[static_cast<std::size_t>(a.on_false)]
                    [static_cast<std::size_t>(b.on_false)]) {
          related[i][j] = false;
          changed = true;
        }
      }
  }
  return related[static_cast<std::size_t>(t1.entry)]
                [static_cast<std::size_t>(t2.entry)];
}

// ── unfolding ───────────────────────────────────────────────────────────────

namespace {

UnfoldPtr leaf(UnfoldTree::Kind k) {
  return std::make_shared<UnfoldTree>(UnfoldTree{k});
}

UnfoldPtr unfold_node(const ThreadGraph& t, int id, int depth,
                      std::map<std::pair<int, int>, UnfoldPtr>& memo) {
  if (depth <= 0) return leaf(UnfoldTree::Kind::Cut);
  auto key = std::make_pair(id, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& n = t.at(id);
  UnfoldPtr r;
  switch (n.kind) {
    case ThreadGraph::Node::Kind::S:
      r = leaf(UnfoldTree::Kind::S);
      break;
    case ThreadGraph::Node::Kind::D:
      r = leaf(UnfoldTree::Kind::D);
      break;
    case ThreadGraph::Node::Kind::Post:
      r = std::make_shared<UnfoldTree>(
          UnfoldTree{UnfoldTree::Kind::Post, n.action,
                     unfold_node(t, n.on_true, depth - 1, memo),
                     unfold_node(t, n.on_false, depth - 1, memo)});
      break;
  }
  memo.emplace(key, r);
  return r;
}

bool unfold_equal_memo(const UnfoldTree* a, const UnfoldTree* b,
                       std::set<std::pair<const UnfoldTree*, const UnfoldTree*>>& seen) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->kind != UnfoldTree::Kind::Post) return true;
  if (!(a->action == b->action)) return false;
  if (!seen.insert({a, b}).second) return true;  // already being compared
  return unfold_equal_memo(a->on_true.get(), b->on_true.get(), seen) &&
         unfold_equal_memo(a->on_false.get(), b->on_false.get(), seen);
}

}  // namespace

UnfoldPtr unfold(const ThreadGraph& t, int depth) {
  std::map<std::pair<int, int>, UnfoldPtr> memo;
  return unfold_node(t, t.entry, depth, memo);
}

bool unfold_equal(const UnfoldPtr& a, const UnfoldPtr& b) {
  std::set<std::pair<const UnfoldTree*, const UnfoldTree*>> seen;
  return unfold_equal_memo(a.get(), b.get(), seen);
}

// ── rendering ───────────────────────────────────────────────────────────────

std::string render_thread(const ThreadGraph& t) {
  std::vector<int> order = reachable(t);
  std::map<int, int> number;
  for (std::size_t i = 0; i < order.size(); ++i)
    number[order[i]] = static_cast<int>(i);
  std::string out;
  for (int id : order) {
    const auto& n = t.at(id);
    out += 'n';
    out += std::to_string(number.at(id));
    out += ": ";
    switch (n.kind) {
      case ThreadGraph::Node::Kind::S:
        out += 'S';
        break;
      case ThreadGraph::Node::Kind::D:
        out += 'D';
        break;
      case ThreadGraph::Node::Kind::Post:
        out += "post " + n.action.dotted() + " -> n" +
               std::to_string(number.at(n.on_true)) + ", n" +
               std::to_string(number.at(n.on_false));
        break;
    }
    out += '\n';
  }
  return out;
}

std::string render_unfold(const UnfoldPtr& t) {
  switch (t->kind) {
    case UnfoldTree::Kind::S:
      return "S";
    case UnfoldTree::Kind::D:
      return "D";
    case UnfoldTree::Kind::Cut:
      return "*";
    case UnfoldTree::Kind::Post:
      return "(" + t->action.dotted() + " -> " + render_unfold(t->on_true) +
             ", " + render_unfold(t->on_false) + ")";
  }
  return "?";
}

}  // namespace isc
