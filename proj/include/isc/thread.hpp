// thread.hpp -- regular threads as finite rooted graphs with
// termination (S), deadlock (D) and postconditional nodes, plus
// thread extraction from PGLB programs, bisimulation and bounded
// unfolding.

#ifndef ISC_THREAD_HPP
#define ISC_THREAD_HPP

#include <memory>
#include <string>
#include <vector>

#include "isc/interface.hpp"
#include "isc/pglb.hpp"

namespace isc {

struct ThreadGraph {
  struct Node {
    enum class Kind { S, D, Post };
    Kind kind;
    FocusMethod action;  // valid for Post
    int on_true = -1;    // successor on reply true
    int on_false = -1;   // successor on reply false
  };

  std::vector<Node> nodes;
  int entry = -1;

  const Node& at(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
};

// Single-node graphs.
ThreadGraph terminated_thread();  // S
ThreadGraph deadlock_thread();    // D
// Post(a, S, S): performs a once and terminates.
ThreadGraph prefix_thread(const FocusMethod& a);

// Thread extraction |P|.  Jump chains are resolved transitively; a
// jump cycle, a forward jump with counter 0 or any position outside
// the program yields D.
ThreadGraph extract(const Program& p);

// FMI of the actions reachable from the entry node.
CanonicalInterface actions_of(const ThreadGraph& t);

// Largest bisimulation between the two entry nodes.
bool bisimilar(const ThreadGraph& t1, const ThreadGraph& t2);

// ── bounded unfolding ───────────────────────────────────────────────────────

struct UnfoldTree;
using UnfoldPtr = std::shared_ptr<const UnfoldTree>;

struct UnfoldTree {
  enum class Kind { S, D, Cut, Post };
  Kind kind;
  FocusMethod action;          // valid for Post
  UnfoldPtr on_true, on_false; // valid for Post
};

// Depth-bounded tree approximation; Cut leaves mark exhausted depth.
// Subtrees are shared per (node, depth), so deep unfoldings of small
// graphs stay small in memory.
UnfoldPtr unfold(const ThreadGraph& t, int depth);

// Structural equality with sharing-aware memoization.
bool unfold_equal(const UnfoldPtr& a, const UnfoldPtr& b);

// Deterministic rendering, nodes numbered in reachability order
// (breadth-first from the entry, true branch before false branch).
std::string render_thread(const ThreadGraph& t);
std::string render_unfold(const UnfoldPtr& t);

}  // namespace isc

#endif  // ISC_THREAD_HPP
