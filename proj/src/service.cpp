#include "isc/service.hpp"

#include <cstdint>
#include <sstream>

namespace isc {

struct Service::FsmDef {
  std::string name;
  CanonicalInterface mi;
  std::string initial;
  // (state, method) -> (reply, next state)
  std::map<std::pair<std::string, std::string>, std::pair<bool, std::string>>
      transitions;
};

Service Service::empty() { return Service(); }

Service Service::boolean_register(bool init) {
  Service s;
  s.tag_ = Tag::BoolReg;
  s.mi_ = interface_of("set:(true+false)+get");
  s.reg_ = init;
  return s;
}

Service Service::stack(const std::vector<int>& initial) {
  for (int v : initial)
    if (v < 0 || v > 2)
      throw ServiceError("stack values must be in {0,1,2}");
  Service s;
  s.tag_ = Tag::Stack;
  s.mi_ = interface_of("(push:+topeq:)(0+1+2)+pop");
  s.stack_ = initial;
  return s;
}

Service Service::counter(std::size_t n) {
  return stack(std::vector<int>(n, 0));
}

// ── FSM service file format ─────────────────────────────────────────────────

namespace {

std::string trim(std::string_view v) {
  std::size_t b = v.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = v.find_last_not_of(" \t\r");
  return std::string(v.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

bool valid_state_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
          (c >= '0' && c <= '9')))
      return false;
  return true;
}

bool valid_method_word(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_constant_char(c) || c == '.') return false;
  return true;
}

}  // namespace

Service Service::load_fsm(std::string_view definition) {
  auto def = std::make_shared<FsmDef>();
  std::istringstream in{std::string(definition)};
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() < 3)
    throw ServiceError("fsm definition needs service, interface and initial lines");

  auto header = [&](std::size_t idx, const std::string& keyword) {
    const std::string& line = lines[idx];
    if (line.rfind(keyword + " ", 0) != 0)
      throw ServiceError("fsm definition line " + std::to_string(idx + 1) +
                         ": expected '" + keyword + " ...'");
    return trim(line.substr(keyword.size() + 1));
  };

  def->name = header(0, "service");
  if (def->name.empty()) throw ServiceError("fsm service name is empty");
  def->mi = interface_of(header(1, "interface"));
  if (!is_mi(def->mi))
    throw ServiceError("fsm interface is not a method interface: " +
                       render(def->mi));
  def->initial = header(2, "initial");
  if (!valid_state_id(def->initial))
    throw ServiceError("fsm initial state id is invalid: " + def->initial);

  std::set<std::string> states{def->initial};
  for (std::size_t i = 3; i < lines.size(); ++i) {
    std::vector<std::string> toks = split_tokens(lines[i]);
    // <state> <method> -> <true|false> <state>
    if (toks.size() != 5 || toks[2] != "->")
      throw ServiceError("fsm transition line malformed: " + lines[i]);
    if (!valid_state_id(toks[0]) || !valid_state_id(toks[4]))
      throw ServiceError("fsm transition has an invalid state id: " + lines[i]);
    if (!valid_method_word(toks[1]))
      throw ServiceError("fsm transition has an invalid method word: " + lines[i]);
    if (!def->mi.words.contains(Word{toks[1], false}))
      throw ServiceError("fsm transition method not in the interface: " + toks[1]);
    bool reply;
    if (toks[3] == "true")
      reply = true;
    else if (toks[3] == "false")
      reply = false;
    else
      throw ServiceError("fsm reply must be true or false: " + lines[i]);
    auto key = std::make_pair(toks[0], toks[1]);
    if (def->transitions.contains(key))
      throw ServiceError("fsm duplicate transition for state " + toks[0] +
                         ", method " + toks[1]);
    def->transitions.emplace(key, std::make_pair(reply, toks[4]));
    states.insert(toks[0]);
    states.insert(toks[4]);
  }

  // Totality: every (state, interface method) pair must have a row.
  for (const std::string& st : states)
    for (const Word& w : def->mi.words)
      if (!def->transitions.contains({st, w.letters}))
        throw ServiceError("fsm is not total: no transition for state " + st +
                           ", method " + w.letters);

  Service s;
  s.tag_ = Tag::Fsm;
  s.mi_ = def->mi;
  s.fsm_state_ = def->initial;
  s.fsm_ = std::move(def);
  return s;
}

// ── stepping ────────────────────────────────────────────────────────────────

std::optional<Service::Reply> Service::step(const std::string& method) const {
  switch (tag_) {
    case Tag::Empty:
      return std::nullopt;
    case Tag::BoolReg: {
      if (method == "get") return Reply{reg_, *this};
      if (method == "set:true" || method == "set:false") {
        Service next = *this;
        next.reg_ = method == "set:true";
        return Reply{next.reg_, next};
      }
      return std::nullopt;
    }
    case Tag::Stack: {
      if (method == "pop") {
        if (stack_.empty()) return Reply{false, *this};
        Service next = *this;
        next.stack_.pop_back();
        return Reply{true, next};
      }
      if (method.size() == 6 && method.rfind("push:", 0) == 0 &&
          method[5] >= '0' && method[5] <= '2') {
        Service next = *this;
        next.stack_.push_back(method[5] - '0');
        return Reply{true, next};
      }
      if (method.size() == 7 && method.rfind("topeq:", 0) == 0 &&
          method[6] >= '0' && method[6] <= '2') {
        bool hit = !stack_.empty() && stack_.back() == method[6] - '0';
        return Reply{hit, *this};
      }
      return std::nullopt;
    }
    case Tag::Fsm: {
      auto it = fsm_->transitions.find({fsm_state_, method});
      if (it == fsm_->transitions.end()) return std::nullopt;
      Service next = *this;
      next.fsm_state_ = it->second.second;
      return Reply{it->second.first, next};
    }
  }
  return std::nullopt;
}

std::string Service::state_key() const {
  switch (tag_) {
    case Tag::Empty:
      return "E";
    case Tag::BoolReg:
      return reg_ ? "B1" : "B0";
    case Tag::Stack: {
      std::string k = "K";
      for (int v : stack_) k += static_cast<char>('0' + v);
      return k;
    }
    case Tag::Fsm:
      return "F" +
             std::to_string(reinterpret_cast<std::uintptr_t>(fsm_.get())) +
             ":" + fsm_state_;
  }
  return "?";
}

std::string Service::describe() const {
  switch (tag_) {
    case Tag::Empty:
      return "empty";
    case Tag::BoolReg:
      return reg_ ? "boolreg(true)" : "boolreg(false)";
    case Tag::Stack: {
      std::string s = "stack(";  // bottom to top
      for (int v : stack_) s += static_cast<char>('0' + v);
      return s + ")";
    }
    case Tag::Fsm:
      return "fsm " + fsm_->name + " state " + fsm_state_;
  }
  return "?";
}

bool provides(const Service& h, const CanonicalInterface& i) {
  if (!is_mi(i))
    throw InterfaceError("provides: interface is not an MI: " + render(i));
  // Built-in capability sets coincide with the declared method interface.
  return leq(i, h.mi());
}

bool superprovides(const Service& h, const CanonicalInterface& i) {
  return provides(h, i);
}

}  // namespace isc
