#include "doctest.h"

#include "isc/service.hpp"

using namespace isc;

namespace {

const char* kToggleFsm =
    "# two-state toggle\n"
    "service toggle\n"
    "interface flip+read\n"
    "initial off\n"
    "off flip -> true on\n"
    "on flip -> false off\n"
    "off read -> false off\n"
    "on read -> true on\n";

}  // namespace

TEST_CASE("empty service") {
  Service h = Service::empty();
  CHECK(h.mi() == CanonicalInterface{});
  CHECK_FALSE(h.step("get").has_value());
  CHECK(provides(h, CanonicalInterface{}));
  CHECK_FALSE(provides(h, interface_of("get")));
}

TEST_CASE("boolean register") {
  Service reg = Service::boolean_register(false);
  CHECK(reg.mi() == interface_of("set:(true+false)+get"));

  auto r = reg.step("get");
  REQUIRE(r);
  CHECK_FALSE(r->value);

  auto set = reg.step("set:true");
  REQUIRE(set);
  CHECK(set->value);  // set:b replies b
  auto get = set->next.step("get");
  REQUIRE(get);
  CHECK(get->value);
  // the old state is unaffected
  CHECK_FALSE(reg.step("get")->value);

  CHECK_FALSE(reg.step("pop").has_value());
}

TEST_CASE("stack over {0,1,2}") {
  Service st = Service::stack({});
  CHECK(st.mi() == interface_of("(push:+topeq:)(0+1+2)+pop"));

  auto pop = st.step("pop");
  REQUIRE(pop);
  CHECK_FALSE(pop->value);  // empty: does nothing, replies false
  CHECK(pop->next.state_key() == st.state_key());

  auto push = st.step("push:2");
  REQUIRE(push);
  CHECK(push->value);
  CHECK(push->next.step("topeq:2")->value);

  // stack 2.1 with 2 pushed first, then 1: top is 1
  Service s21 = Service::stack({2, 1});
  CHECK_FALSE(s21.step("topeq:2")->value);
  CHECK(s21.step("topeq:1")->value);

  CHECK_FALSE(st.step("get").has_value());
  CHECK_THROWS_AS(Service::stack({3}), ServiceError);
}

TEST_CASE("stack laws") {
  std::vector<Service> states{Service::stack({}), Service::stack({1}),
                              Service::stack({0, 2, 1})};
  for (const Service& s : states)
    for (int i = 0; i <= 2; ++i) {
      std::string digit = std::to_string(i);
      auto pushed = s.step("push:" + digit);
      REQUIRE(pushed);
      CHECK(pushed->value);
      CHECK(pushed->next.step("topeq:" + digit)->value);
      auto popped = pushed->next.step("pop");
      CHECK(popped->value);
      CHECK(popped->next.state_key() == s.state_key());
      // topeq never changes state
      CHECK(s.step("topeq:" + digit)->next.state_key() == s.state_key());
    }
}

TEST_CASE("counter is a stack of zeros") {
  CHECK(Service::counter(0).state_key() == Service::stack({}).state_key());
  Service c3 = Service::counter(3);
  auto pop = c3.step("pop");
  REQUIRE(pop);
  CHECK(pop->value);
  CHECK(pop->next.state_key() == Service::counter(2).state_key());
  CHECK_FALSE(Service::counter(0).step("pop")->value);
  CHECK(Service::counter(2).step("topeq:0")->value);
}

TEST_CASE("counter behaves as the all-zero stack under method traces") {
  const std::vector<std::string> methods{"push:0", "pop", "topeq:0", "push:1",
                                         "topeq:1"};
  Service a = Service::counter(2);
  Service b = Service::stack({0, 0});
  // cycle through a fixed trace of every method
  for (int round = 0; round < 3; ++round)
    for (const std::string& m : methods) {
      auto ra = a.step(m);
      auto rb = b.step(m);
      REQUIRE(ra);
      REQUIRE(rb);
      CHECK(ra->value == rb->value);
      a = ra->next;
      b = rb->next;
      CHECK(a.state_key() == b.state_key());
    }
}

TEST_CASE("fsm service") {
  Service t = Service::load_fsm(kToggleFsm);
  CHECK(t.mi() == interface_of("flip+read"));
  CHECK_FALSE(t.step("read")->value);
  auto flip = t.step("flip");
  REQUIRE(flip);
  CHECK(flip->value);
  CHECK(flip->next.step("read")->value);
  CHECK_FALSE(flip->next.step("flip")->value);        // cycles back
  CHECK_FALSE(t.step("missing").has_value());
}

TEST_CASE("fsm load errors") {
  // FMI (period-containing) interface rejected
  CHECK_THROWS_AS(Service::load_fsm("service s\ninterface f.m\ninitial a\n"),
                  ServiceError);
  // omitted (state, method) row
  CHECK_THROWS_WITH_AS(
      Service::load_fsm("service s\ninterface m\ninitial a\n"
                        "a m -> true b\n"),
      doctest::Contains("state b, method m"), ServiceError);
  CHECK_THROWS_AS(Service::load_fsm(""), ServiceError);
  CHECK_THROWS_AS(Service::load_fsm("service s\ninterface m\ninitial a\n"
                                    "a m -> maybe a\n"),
                  ServiceError);
  CHECK_THROWS_AS(Service::load_fsm("service s\ninterface m\ninitial a\n"
                                    "a other -> true a\n"),
                  ServiceError);
  CHECK_THROWS_AS(Service::load_fsm("service s\ninterface m\ninitial a\n"
                                    "a m -> true a\na m -> false a\n"),
                  ServiceError);
}

TEST_CASE("provides and superprovides") {
  Service st = Service::stack({});
  CHECK(provides(st, interface_of("(push:+topeq:)(0+1+2)+pop")));
  CHECK(provides(st, interface_of("pop")));
  CHECK(provides(st, CanonicalInterface{}));
  CHECK_FALSE(provides(st, interface_of("push:3")));
  CHECK(superprovides(st, interface_of("pop")) == provides(st, interface_of("pop")));
  CHECK_THROWS_AS(provides(st, interface_of("a.b")), InterfaceError);
}
