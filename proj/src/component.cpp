#include "isc/component.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace isc {

// ── requires family ─────────────────────────────────────────────────────────

namespace {

void check_fmi(const CanonicalInterface& i, const char* who) {
  if (!is_fmi(i))
    throw InterfaceError(std::string(who) + ": interface is not an FMI: " +
                         render(i));
}

}  // namespace

bool requires_exact(const Program& p, const CanonicalInterface& i) {
  check_fmi(i, "requires");
  return occurring_basics(p) == i;
}

bool subrequires(const Program& p, const CanonicalInterface& i) {
  check_fmi(i, "subrequires");
  return leq(occurring_basics(p), i);
}

bool properly_subrequires(const Program& p, const CanonicalInterface& i) {
  check_fmi(i, "properly_subrequires");
  return leq(occurring_basics(p), i) && occurring_basics(p) != i;
}

bool thread_requires_exact(const ThreadGraph& t, const CanonicalInterface& i) {
  check_fmi(i, "thread_requires");
  return actions_of(t) == i;
}

bool thread_subrequires(const ThreadGraph& t, const CanonicalInterface& i) {
  check_fmi(i, "thread_subrequires");
  return leq(actions_of(t), i);
}

bool thread_properly_subrequires(const ThreadGraph& t,
                                 const CanonicalInterface& i) {
  check_fmi(i, "thread_properly_subrequires");
  return leq(actions_of(t), i) && actions_of(t) != i;
}

namespace {

// |#n;P|, with the positions of P shifted by the prefixed jump.
ThreadGraph extract_from(const Program& p, unsigned long n) {
  Program prefixed;
  prefixed.instructions.reserve(p.length() + 1);
  prefixed.instructions.push_back({Instruction::Kind::FwdJump, {}, n});
  prefixed.instructions.insert(prefixed.instructions.end(),
                               p.instructions.begin(), p.instructions.end());
  return extract(prefixed);
}

}  // namespace

bool n_requires(const Program& p, const CanonicalInterface& i, unsigned long n,
                bool sub) {
  check_fmi(i, "n_requires");
  if (n < 1) throw std::invalid_argument("n_requires: n must be >= 1");
  ThreadGraph t = extract_from(p, n);
  return sub ? thread_subrequires(t, i) : thread_requires_exact(t, i);
}

bool range_requires(const Program& p, const CanonicalInterface& i,
                    unsigned long n, bool sub) {
  check_fmi(i, "range_requires");
  if (n < 1) throw std::invalid_argument("range_requires: n must be >= 1");
  for (unsigned long m = 1; m <= n; ++m)
    if (!n_requires(p, i, m, sub)) return false;
  return true;
}

// ── validation ──────────────────────────────────────────────────────────────

ValidationMode parse_mode(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head;
  if (!(in >> head)) throw BundleError("empty validation mode");
  ValidationMode m;
  bool wants_n = false;
  if (head == "requires") {
    m.kind = ValidationMode::Kind::Requires;
  } else if (head == "subrequires") {
    m.kind = ValidationMode::Kind::Subrequires;
  } else if (head == "n-requires") {
    m.kind = ValidationMode::Kind::NRequires;
    wants_n = true;
  } else if (head == "sub-n-requires") {
    m.kind = ValidationMode::Kind::SubNRequires;
    wants_n = true;
  } else if (head == "range-requires") {
    m.kind = ValidationMode::Kind::RangeRequires;
    wants_n = true;
  } else if (head == "sub-range-requires") {
    m.kind = ValidationMode::Kind::SubRangeRequires;
    wants_n = true;
  } else {
    throw BundleError("unknown validation mode: " + head);
  }
  if (wants_n) {
    if (!(in >> m.n) || m.n < 1)
      throw BundleError("mode '" + head + "' needs a counter >= 1");
  }
  std::string rest;
  if (in >> rest) throw BundleError("trailing text in validation mode: " + rest);
  return m;
}

std::string render_mode(const ValidationMode& m) {
  switch (m.kind) {
    case ValidationMode::Kind::Requires:         return "requires";
    case ValidationMode::Kind::Subrequires:      return "subrequires";
    case ValidationMode::Kind::NRequires:        return "n-requires " + std::to_string(m.n);
    case ValidationMode::Kind::SubNRequires:     return "sub-n-requires " + std::to_string(m.n);
    case ValidationMode::Kind::RangeRequires:    return "range-requires " + std::to_string(m.n);
    case ValidationMode::Kind::SubRangeRequires: return "sub-range-requires " + std::to_string(m.n);
  }
  return "?";
}

ValidationReport validate(const InseqComponent& c) {
  ValidationReport r;
  if (!is_fmi(c.interface)) {
    r.detail = "interface is not an FMI: " + render(c.interface);
    return r;
  }
  bool ok = false;
  switch (c.mode.kind) {
    case ValidationMode::Kind::Requires:
      r.computed = occurring_basics(c.body);
      ok = requires_exact(c.body, c.interface);
      break;
    case ValidationMode::Kind::Subrequires:
      r.computed = occurring_basics(c.body);
      ok = subrequires(c.body, c.interface);
      break;
    case ValidationMode::Kind::NRequires:
    case ValidationMode::Kind::SubNRequires:
      r.computed = actions_of(extract_from(c.body, c.mode.n));
      ok = n_requires(c.body, c.interface, c.mode.n,
                      c.mode.kind == ValidationMode::Kind::SubNRequires);
      break;
    case ValidationMode::Kind::RangeRequires:
    case ValidationMode::Kind::SubRangeRequires:
      r.computed = actions_of(extract_from(c.body, 1));
      ok = range_requires(c.body, c.interface, c.mode.n,
                          c.mode.kind == ValidationMode::Kind::SubRangeRequires);
      break;
  }
  r.ok = ok;
  if (!ok)
    r.detail = "body does not " + render_mode(c.mode) + " " +
               render(c.interface) + " (computed " + render(r.computed) + ")";
  return r;
}

ValidationReport validate(const ThreadComponent& c) {
  ValidationReport r;
  if (!is_fmi(c.interface)) {
    r.detail = "interface is not an FMI: " + render(c.interface);
    return r;
  }
  r.computed = actions_of(c.body);
  r.ok = leq(r.computed, c.interface);
  if (!r.ok)
    r.detail = "thread does not subrequire " + render(c.interface) +
               " (actions " + render(r.computed) + ")";
  return r;
}

ValidationReport validate(const ServiceComponent& c) {
  ValidationReport r;
  if (!is_mi(c.interface)) {
    r.detail = "interface is not an MI: " + render(c.interface);
    return r;
  }
  r.computed = c.body.mi();
  r.ok = provides(c.body, c.interface);
  if (!r.ok)
    r.detail = "service does not provide " + render(c.interface) +
               " (capability " + render(r.computed) + ")";
  return r;
}

// ── use and apply on threads ────────────────────────────────────────────────

namespace {

struct BudgetExceeded {};

struct UseBuilder {
  const ThreadGraph& t;
  const std::string& focus;
  std::size_t budget;

  ThreadGraph g;
  std::map<std::string, int> resolved;  // product key -> result node
  std::set<std::string> in_progress;    // silent resolutions underway
  std::size_t expanded = 0;
  int s_id = -1, d_id = -1;

  int s_node() {
    if (s_id < 0) {
      s_id = static_cast<int>(g.nodes.size());
      g.nodes.push_back({ThreadGraph::Node::Kind::S});
    }
    return s_id;
  }

  int d_node() {
    if (d_id < 0) {
      d_id = static_cast<int>(g.nodes.size());
      g.nodes.push_back({ThreadGraph::Node::Kind::D});
    }
    return d_id;
  }

  int resolve(int node, const Service& h) {
    const auto& n = t.at(node);
    if (n.kind == ThreadGraph::Node::Kind::S) return s_node();
    if (n.kind == ThreadGraph::Node::Kind::D) return d_node();

    std::string key = std::to_string(node) + "|" + h.state_key();
    if (auto it = resolved.find(key); it != resolved.end()) return it->second;
    // A silent cycle (service steps only, no visible action) diverges.
    if (in_progress.contains(key)) return d_node();
    if (expanded >= budget) throw BudgetExceeded{};
    ++expanded;

    if (n.action.focus == focus) {
      in_progress.insert(key);
      int id;
      if (auto r = h.step(n.action.method)) {
        id = resolve(r->value ? n.on_true : n.on_false, r->next);
      } else {
        id = d_node();
      }
      in_progress.erase(key);
      resolved.emplace(key, id);
      return id;
    }

    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back({ThreadGraph::Node::Kind::Post, n.action});
    resolved.emplace(key, id);
    int ti = resolve(n.on_true, h);
    int fi = resolve(n.on_false, h);
    g.nodes[static_cast<std::size_t>(id)].on_true = ti;
    g.nodes[static_cast<std::size_t>(id)].on_false = fi;
    return id;
  }
};

}  // namespace

UseOutcome use_thread(const ThreadGraph& t, const std::string& focus,
                      const Service& h, std::size_t budget) {
  UseBuilder b{t, focus, budget};
  try {
    b.g.entry = b.resolve(t.entry, h);
  } catch (const BudgetExceeded&) {
    return {UseOutcome::Kind::BudgetExhausted, {}};
  }
  return {UseOutcome::Kind::Graph, std::move(b.g)};
}

ApplyOutcome apply_thread(const ThreadGraph& t, const std::string& focus,
                          const Service& h, std::size_t budget) {
  int node = t.entry;
  Service current = h;
  std::size_t steps = 0;
  for (;;) {
    const auto& n = t.at(node);
    switch (n.kind) {
      case ThreadGraph::Node::Kind::S:
        return {ApplyOutcome::Kind::Service, std::move(current)};
      case ThreadGraph::Node::Kind::D:
        return {ApplyOutcome::Kind::Empty, std::nullopt};
      case ThreadGraph::Node::Kind::Post: {
        if (n.action.focus != focus)
          return {ApplyOutcome::Kind::Empty, std::nullopt};
        if (steps >= budget)
          return {ApplyOutcome::Kind::BudgetExhausted, std::nullopt};
        ++steps;
        auto r = current.step(n.action.method);
        if (!r) return {ApplyOutcome::Kind::Empty, std::nullopt};
        current = std::move(r->next);
        node = r->value ? n.on_true : n.on_false;
        break;
      }
    }
  }
}

// ── component compositions ──────────────────────────────────────────────────

UseCompositionResult use_component(const InseqComponent& c,
                                   const std::string& focus,
                                   const ServiceComponent& s,
                                   std::size_t budget) {
  const std::string selector = focus + ".";
  bool valid = validate(c).ok && validate(s).ok;
  if (!valid || !leq(derivative(selector, c.interface), s.interface))
    return {false, {}, {UseOutcome::Kind::Graph, deadlock_thread()}};
  UseCompositionResult r;
  r.matching = true;
  r.interface = filter_complement(selector, c.interface);
  r.outcome = use_thread(extract(c.body), focus, s.body, budget);
  return r;
}

ApplyCompositionResult apply_component(const InseqComponent& c,
                                       const std::string& focus,
                                       const ServiceComponent& s,
                                       std::size_t budget) {
  const std::string selector = focus + ".";
  bool valid = validate(c).ok && validate(s).ok;
  if (!valid ||
      !leq(c.interface, seq(word_interface(selector), s.interface))) {
    return {false, {}, {ApplyOutcome::Kind::Service, Service::empty()}};
  }
  ApplyCompositionResult r;
  r.matching = true;
  r.interface = s.interface;
  r.outcome = apply_thread(extract(c.body), focus, s.body, budget);
  if (r.outcome.kind == ApplyOutcome::Kind::Empty)
    r.outcome = {ApplyOutcome::Kind::Service, Service::empty()};
  return r;
}

// ── text formats ────────────────────────────────────────────────────────────

namespace {

std::string trimmed(std::string_view v) {
  std::size_t b = v.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = v.find_last_not_of(" \t\r\n");
  return std::string(v.substr(b, e - b + 1));
}

}  // namespace

InseqComponent parse_component_bundle(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::string> iface_text, mode_text, body_text;
  bool in_body = false;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (in_body) {
      if (!t.empty()) *body_text += (body_text->empty() ? "" : "\n") + t;
      continue;
    }
    if (t.empty()) continue;
    if (t.rfind("interface:", 0) == 0) {
      iface_text = trimmed(t.substr(10));
    } else if (t.rfind("mode:", 0) == 0) {
      mode_text = trimmed(t.substr(5));
    } else if (t.rfind("body:", 0) == 0) {
      body_text = trimmed(t.substr(5));
      in_body = true;
    } else {
      throw BundleError("unexpected line in component bundle: " + t);
    }
  }
  if (!iface_text) throw BundleError("component bundle lacks an interface: section");
  if (!body_text || body_text->empty())
    throw BundleError("component bundle lacks a body: section");
  InseqComponent c;
  c.interface = interface_of(*iface_text);
  if (mode_text) c.mode = parse_mode(*mode_text);
  c.body = parse_pglb(*body_text);
  return c;
}

ServiceComponent parse_service_spec(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.empty()) throw BundleError("empty service spec");

  auto arity = [&](std::size_t n) {
    if (toks.size() != n)
      throw BundleError("service spec '" + toks[0] + "' expects " +
                        std::to_string(n - 1) + " argument(s)");
  };

  Service h = Service::empty();
  if (toks[0] == "empty") {
    arity(1);
  } else if (toks[0] == "boolreg") {
    arity(2);
    if (toks[1] == "true")
      h = Service::boolean_register(true);
    else if (toks[1] == "false")
      h = Service::boolean_register(false);
    else
      throw BundleError("boolreg expects true or false");
  } else if (toks[0] == "counter") {
    arity(2);
    std::size_t pos = 0;
    unsigned long n = std::stoul(toks[1], &pos);
    if (pos != toks[1].size()) throw BundleError("counter expects a number");
    h = Service::counter(n);
  } else if (toks[0] == "stack") {
    if (toks.size() > 2) throw BundleError("stack expects at most one argument");
    std::vector<int> init;
    if (toks.size() == 2)
      for (char c : toks[1]) {
        if (c < '0' || c > '2')
          throw BundleError("stack contents must be digits in {0,1,2}");
        init.push_back(c - '0');  // listed bottom to top
      }
    h = Service::stack(init);
  } else {
    // "fsm <path>" or a bare FSM file path
    std::string path = toks[0] == "fsm" ? (arity(2), toks[1]) : trimmed(spec);
    std::ifstream file(path);
    if (!file) throw BundleError("cannot open FSM service file: " + path);
    std::ostringstream content;
    content << file.rdbuf();
    h = Service::load_fsm(content.str());
  }
  return ServiceComponent{h.mi(), h};
}

}  // namespace isc
