// component.hpp -- inseq/thread/service components, the requires
// family of interface-matching predicates, and the use and apply
// compositions lifted to components.

#ifndef ISC_COMPONENT_HPP
#define ISC_COMPONENT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "isc/interface.hpp"
#include "isc/pglb.hpp"
#include "isc/service.hpp"
#include "isc/thread.hpp"

namespace isc {

// ── requires family ─────────────────────────────────────────────────────────
// All predicates reject a non-FMI interface with InterfaceError.

// Exact match: the basics occurring in p are exactly i.
bool requires_exact(const Program& p, const CanonicalInterface& i);
// The occurring basics are a sub-interface of i.
bool subrequires(const Program& p, const CanonicalInterface& i);
bool properly_subrequires(const Program& p, const CanonicalInterface& i);

// Behavioral variants over the extracted thread.
bool thread_requires_exact(const ThreadGraph& t, const CanonicalInterface& i);
bool thread_subrequires(const ThreadGraph& t, const CanonicalInterface& i);
bool thread_properly_subrequires(const ThreadGraph& t, const CanonicalInterface& i);

// (sub-)n-requires: the predicate applied to |#n;P|, n >= 1.
bool n_requires(const Program& p, const CanonicalInterface& i, unsigned long n,
                bool sub);
// (sub-)(1,n)-requires: conjunction over m = 1..n.
bool range_requires(const Program& p, const CanonicalInterface& i,
                    unsigned long n, bool sub);

// ── components ──────────────────────────────────────────────────────────────

struct ValidationMode {
  enum class Kind {
    Requires,
    Subrequires,
    NRequires,
    SubNRequires,
    RangeRequires,
    SubRangeRequires,
  };
  Kind kind = Kind::Subrequires;
  unsigned long n = 0;  // valid for the n-/range- kinds
};

// Mode syntax of component bundles: "requires" | "subrequires" |
// "[sub-]n-requires <n>" | "[sub-]range-requires <n>".
ValidationMode parse_mode(std::string_view text);
std::string render_mode(const ValidationMode& m);

struct InseqComponent {
  CanonicalInterface interface;  // an FMI
  Program body;
  ValidationMode mode;  // defaults to subrequires
};

struct ThreadComponent {
  CanonicalInterface interface;  // an FMI
  ThreadGraph body;
};

struct ServiceComponent {
  CanonicalInterface interface;  // an MI
  Service body;
};

struct ValidationReport {
  bool ok = false;
  std::string detail;             // failure description when !ok
  CanonicalInterface computed;    // required/provided interface
};

ValidationReport validate(const InseqComponent& c);
ValidationReport validate(const ThreadComponent& c);
ValidationReport validate(const ServiceComponent& c);

// ── use and apply on threads ────────────────────────────────────────────────

struct UseOutcome {
  enum class Kind { Graph, BudgetExhausted };
  Kind kind = Kind::Graph;
  ThreadGraph graph;  // valid for Graph
};

// Runs t against h at the given focus, exploring at most `budget`
// postconditional product states.  Actions at other foci pass through;
// an unprovided method or a divergent cycle of silent service steps
// yields D.
UseOutcome use_thread(const ThreadGraph& t, const std::string& focus,
                      const Service& h, std::size_t budget);

struct ApplyOutcome {
  enum class Kind { Service, Empty, BudgetExhausted };
  Kind kind = Kind::Empty;
  std::optional<Service> service;  // valid for Service
};

// Runs the single execution path of t against h; S returns the current
// service, D / an unprovided method / a foreign focus return the empty
// outcome.  Budget counts service steps.
ApplyOutcome apply_thread(const ThreadGraph& t, const std::string& focus,
                          const Service& h, std::size_t budget);

// ── component compositions ──────────────────────────────────────────────────

struct UseCompositionResult {
  bool matching = false;
  CanonicalInterface interface;  // delta when non-matching
  UseOutcome outcome;            // D when non-matching
};

// (i,P) /_f (j,H).  Matching requires both components to validate and
// derivative(f., i) <= j; the result is (filter_complement(f., i), |P| /_f H).
UseCompositionResult use_component(const InseqComponent& c,
                                   const std::string& focus,
                                   const ServiceComponent& s,
                                   std::size_t budget);

struct ApplyCompositionResult {
  bool matching = false;
  CanonicalInterface interface;  // delta when non-matching
  ApplyOutcome outcome;          // the empty service when non-matching
};

// (i,P) o_f (j,H).  Matching requires both components to validate and
// i <= f.j; the result is (j, |P| o_f H), with the empty service for a
// deadlocked or meaningless run.
ApplyCompositionResult apply_component(const InseqComponent& c,
                                       const std::string& focus,
                                       const ServiceComponent& s,
                                       std::size_t budget);

// ── text formats ────────────────────────────────────────────────────────────

struct BundleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Component bundle file: `interface:` expression, optional `mode:`
// line, `body:` followed by PGLB text.
InseqComponent parse_component_bundle(std::string_view text);

// Service spec: "empty" | "boolreg <true|false>" | "stack [digits]" |
// "counter <n>" | "fsm <path>" | a bare FSM file path.  The component
// interface is the service's own method interface.
ServiceComponent parse_service_spec(std::string_view spec);

}  // namespace isc

#endif  // ISC_COMPONENT_HPP
