#include "doctest.h"

#include "isc/thread.hpp"
#include "oracles.hpp"

using namespace isc;

namespace {

ThreadGraph x(const char* text) { return extract(parse_pglb(text)); }

}  // namespace

TEST_CASE("extract resolves jumps onto halt and deadlock") {
  CHECK(bisimilar(x("#3;b2.set:false;!;!"), terminated_thread()));
  CHECK(bisimilar(x("!"), terminated_thread()));
  CHECK(bisimilar(x("#0"), deadlock_thread()));
  CHECK(bisimilar(x("\\#1;!"), deadlock_thread()));  // jumps before position 1
  CHECK(bisimilar(x("#2;!"), deadlock_thread()));    // jumps past the end
  CHECK(bisimilar(x("#1;#1"), deadlock_thread()));   // runs off the end
  CHECK(bisimilar(x("#2;!;\\#1"), terminated_thread()));
  CHECK(bisimilar(x("\\#0"), deadlock_thread()));    // self-targeting jump
  CHECK(bisimilar(x("#1;\\#1"), deadlock_thread())); // jump cycle
}

TEST_CASE("extract postconditional structure") {
  ThreadGraph t = x("-b1.get;#3;b4.set:false;#3;b4.set:true;!");
  const auto& entry = t.at(t.entry);
  REQUIRE(entry.kind == ThreadGraph::Node::Kind::Post);
  CHECK(entry.action == FocusMethod{"b1", "get"});
  // negative test: reply true skips to b4.set:true via position 5
  CHECK(t.at(entry.on_true).action == FocusMethod{"b4", "set:true"});
  CHECK(t.at(entry.on_false).action == FocusMethod{"b4", "set:false"});
  CHECK(t.nodes.size() <= parse_pglb("-b1.get;#3;b4.set:false;#3;b4.set:true;!")
                                  .length() +
                              2);
}

TEST_CASE("actions_of collects reachable actions only") {
  CHECK(actions_of(x("#3;b2.set:false;!;!")) == CanonicalInterface{});
  CHECK(actions_of(x("#2;#3;b2.set:false;!;!")) == interface_of("b2.set:false"));
  CHECK(actions_of(terminated_thread()) == CanonicalInterface{});
  CHECK(actions_of(x("f.m;!;g.n;!")) == interface_of("f.m"));
}

TEST_CASE("bisimilar") {
  CHECK(bisimilar(x("f.m;!"), x("+f.m;!;!")));
  CHECK_FALSE(bisimilar(terminated_thread(), deadlock_thread()));
  CHECK(bisimilar(x("#1;f.m;!"), x("f.m;!")));
  CHECK_FALSE(bisimilar(x("f.m;!"), x("g.m;!")));
  CHECK_FALSE(bisimilar(x("+f.m;!;#0"), x("f.m;!")));
  // a loop against its one-step unrolling
  CHECK(bisimilar(x("f.m;\\#1"), x("f.m;f.m;\\#2")));
}

TEST_CASE("unfold") {
  CHECK(unfold(terminated_thread(), 3)->kind == UnfoldTree::Kind::S);
  CHECK(unfold(deadlock_thread(), 1)->kind == UnfoldTree::Kind::D);
  UnfoldPtr u = unfold(x("+f.m;!;#0"), 1);
  REQUIRE(u->kind == UnfoldTree::Kind::Post);
  CHECK(u->on_true->kind == UnfoldTree::Kind::Cut);
  CHECK(u->on_false->kind == UnfoldTree::Kind::Cut);
  UnfoldPtr u2 = unfold(x("+f.m;!;#0"), 2);
  CHECK(u2->on_true->kind == UnfoldTree::Kind::S);
  CHECK(u2->on_false->kind == UnfoldTree::Kind::D);
  // looping thread: only post and cut nodes
  UnfoldPtr loop = unfold(x("f.m;\\#1"), 3);
  CHECK(render_unfold(loop) ==
        "(f.m -> (f.m -> (f.m -> *, *), (f.m -> *, *)), "
        "(f.m -> (f.m -> *, *), (f.m -> *, *)))");
  // deep unfolding of a cyclic graph stays shared
  CHECK(unfold_equal(unfold(x("f.m;\\#1"), 500), unfold(x("#1;f.m;\\#2;!"), 500)));
}

TEST_CASE("unfold agrees with the direct interpreter") {
  std::mt19937 rng(7);
  std::vector<FocusMethod> actions{{"f", "m"}, {"g", "n"}, {"c", "pop"}};
  for (int it = 0; it < 300; ++it) {
    Program p = isc::testing::random_program(rng, 6, actions);
    for (int depth : {1, 3, 8})
      CHECK(unfold_equal(unfold(extract(p), depth),
                         isc::testing::interp_unfold(p, depth)));
  }
}

TEST_CASE("bisimilar matches unfold agreement at combined node count") {
  std::mt19937 rng(11);
  std::vector<FocusMethod> actions{{"f", "m"}, {"g", "n"}};
  for (int it = 0; it < 400; ++it) {
    Program p1 = isc::testing::random_program(rng, 5, actions);
    Program p2 = isc::testing::random_program(rng, 5, actions);
    ThreadGraph t1 = extract(p1), t2 = extract(p2);
    int depth = static_cast<int>(t1.nodes.size() + t2.nodes.size());
    CHECK(bisimilar(t1, t2) ==
          unfold_equal(unfold(t1, depth), unfold(t2, depth)));
  }
}

TEST_CASE("render_thread is deterministic") {
  CHECK(render_thread(x("+f.m;!;#0")) ==
        "n0: post f.m -> n1, n2\n"
        "n1: S\n"
        "n2: D\n");
  CHECK(render_thread(x("f.m;\\#1")) == "n0: post f.m -> n0, n0\n");
}
