#include "isc/interface.hpp"

#include <algorithm>
#include <cassert>

namespace isc {

TermPtr make_delta() {
  static const TermPtr delta =
      std::make_shared<TermExpr>(TermExpr{TermExpr::Kind::Delta});
  return delta;
}

TermPtr make_atom(char c) {
  if (!is_constant_char(c))
    throw std::invalid_argument(std::string("not a constant character: ") + c);
  auto t = std::make_shared<TermExpr>();
  t->kind = TermExpr::Kind::Atom;
  t->atom = c;
  return t;
}

static TermPtr make_binary(TermExpr::Kind k, TermPtr lhs, TermPtr rhs) {
  assert(lhs && rhs);
  auto t = std::make_shared<TermExpr>();
  t->kind = k;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

TermPtr make_sum(TermPtr lhs, TermPtr rhs) {
  return make_binary(TermExpr::Kind::Sum, std::move(lhs), std::move(rhs));
}

TermPtr make_seq(TermPtr lhs, TermPtr rhs) {
  return make_binary(TermExpr::Kind::Seq, std::move(lhs), std::move(rhs));
}

// ── parsing ─────────────────────────────────────────────────────────────────

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    TermPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::string shown = pos_ < text_.size()
                            ? std::string("'") + text_[pos_] + "'"
                            : std::string("end of input");
    throw ParseError(what + " at position " + std::to_string(pos_) + " (" +
                         shown + ")",
                     pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_constant_char(c) || c == '@' || c == '(';
  }

  TermPtr expr() {
    TermPtr e = term();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      e = make_sum(std::move(e), term());
      skip_ws();
    }
    return e;
  }

  TermPtr term() {
    skip_ws();
    if (!at_factor()) fail("expected a constant, '@' or '('");
    TermPtr t = factor();
    while (at_factor())
      t = make_seq(std::move(t), factor());  // juxtaposition, left-associated
    return t;
  }

  TermPtr factor() {
    skip_ws();
    char c = text_[pos_];
    if (c == '@') {
      ++pos_;
      return make_delta();
    }
    if (c == '(') {
      ++pos_;
      TermPtr e = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        fail("expected ')'");
      ++pos_;
      return e;
    }
    if (is_constant_char(c)) {
      ++pos_;
      return make_atom(c);
    }
    fail("character outside the interface alphabet");
  }
};

}  // namespace

TermPtr parse_interface(std::string_view text) { return Parser(text).parse(); }

// ── normalization ───────────────────────────────────────────────────────────

CanonicalInterface normalize(const TermPtr& t) {
  if (!t) throw std::invalid_argument("null term");
  switch (t->kind) {
    case TermExpr::Kind::Delta:
      return {};
    case TermExpr::Kind::Atom:
      return CanonicalInterface{{Word{std::string(1, t->atom), false}}};
    case TermExpr::Kind::Sum:
      return sum(normalize(t->lhs), normalize(t->rhs));
    case TermExpr::Kind::Seq:
      return seq(normalize(t->lhs), normalize(t->rhs));
  }
  throw std::logic_error("corrupt term");
}

CanonicalInterface interface_of(std::string_view text) {
  return normalize(parse_interface(text));
}

CanonicalInterface word_interface(std::string_view beta) {
  if (beta.empty()) throw std::invalid_argument("empty word");
  for (char c : beta)
    if (!is_constant_char(c))
      throw std::invalid_argument(std::string("not a constant character: ") + c);
  return CanonicalInterface{{Word{std::string(beta), false}}};
}

CanonicalInterface sum(const CanonicalInterface& x, const CanonicalInterface& y) {
  CanonicalInterface r = x;
  r.words.insert(y.words.begin(), y.words.end());
  return r;
}

CanonicalInterface seq(const CanonicalInterface& x, const CanonicalInterface& y) {
  CanonicalInterface r;
  for (const Word& u : x.words) {
    if (u.deadlocked) {
      // u.delta absorbs everything to its right
      r.words.insert(u);
    } else if (y.empty()) {
      // u.delta
      r.words.insert(Word{u.letters, true});
    } else {
      for (const Word& v : y.words)
        r.words.insert(Word{u.letters + v.letters, v.deadlocked});
    }
  }
  return r;
}

bool leq(const CanonicalInterface& x, const CanonicalInterface& y) {
  return std::includes(y.words.begin(), y.words.end(), x.words.begin(),
                       x.words.end());
}

static void check_selector(std::string_view beta) {
  if (beta.empty()) throw std::invalid_argument("empty selector path");
  for (char c : beta)
    if (!is_constant_char(c))
      throw std::invalid_argument(std::string("not a constant character: ") + c);
}

CanonicalInterface derivative(std::string_view beta, const CanonicalInterface& x) {
  check_selector(beta);
  CanonicalInterface r;
  for (const Word& w : x.words) {
    // Only words with beta as a strict prefix leave a remainder; a word
    // equal to beta derives to delta (or to a bare deadlock marker,
    // which contributes nothing either).
    if (w.letters.size() > beta.size() &&
        w.letters.compare(0, beta.size(), beta) == 0)
      r.words.insert(Word{w.letters.substr(beta.size()), w.deadlocked});
  }
  return r;
}

namespace {

// Literal evaluation of the filter-complement clauses on one word.
// Returns true if the word survives the beta filter.
bool filter_keeps(std::string_view beta, std::string_view letters,
                  bool deadlocked) {
  assert(!beta.empty());
  if (letters.empty())
    return false;  // bare delta: the filter yields delta
  if (beta[0] != letters[0])
    return true;
  if (beta.size() == 1)
    return false;
  std::string_view tail = letters.substr(1);
  if (tail.empty())
    return !deadlocked;  // plain single letter survives; its delta twin
                         // absorbs the remaining filter suffix
  return filter_keeps(beta.substr(1), tail, deadlocked);
}

}  // namespace

CanonicalInterface filter_complement(std::string_view beta,
                                     const CanonicalInterface& x) {
  check_selector(beta);
  CanonicalInterface r;
  for (const Word& w : x.words)
    if (filter_keeps(beta, w.letters, w.deadlocked))
      r.words.insert(w);
  return r;
}

namespace {

// Splits a word into focus/method at its single period; returns false
// if the word is not an admissible FMI element.
bool fmi_parts(const Word& w, std::string* focus, std::string* method) {
  if (w.deadlocked) return false;
  std::size_t dot = w.letters.find('.');
  if (dot == std::string::npos) return false;
  if (w.letters.find('.', dot + 1) != std::string::npos) return false;
  std::string f = w.letters.substr(0, dot);
  std::string m = w.letters.substr(dot + 1);
  if (f.empty() || m.empty()) return false;
  if (!is_letter_char(f[0]) || !is_letter_char(m[0])) return false;
  if (focus) *focus = std::move(f);
  if (method) *method = std::move(m);
  return true;
}

}  // namespace

bool is_fmi(const CanonicalInterface& x) {
  for (const Word& w : x.words)
    if (!fmi_parts(w, nullptr, nullptr)) return false;
  return true;
}

std::map<std::string, CanonicalInterface> fmi_split(const CanonicalInterface& x) {
  if (x.empty())
    throw InterfaceError("fmi_split: the empty interface has no foci");
  std::map<std::string, CanonicalInterface> groups;
  for (const Word& w : x.words) {
    std::string focus, method;
    if (!fmi_parts(w, &focus, &method))
      throw InterfaceError("fmi_split: not a focus-method word: " + w.letters +
                           (w.deadlocked ? "@" : ""));
    groups[focus].words.insert(Word{std::move(method), false});
  }
  return groups;
}

bool is_mi(const CanonicalInterface& x) {
  for (const Word& w : x.words)
    if (w.deadlocked || w.letters.find('.') != std::string::npos) return false;
  return true;
}

std::string render(const CanonicalInterface& x) {
  if (x.empty()) return "@";
  std::string out;
  for (const Word& w : x.words) {
    if (!out.empty()) out += '+';
    out += w.letters;
    if (w.deadlocked) out += '@';
  }
  return out;
}

}  // namespace isc
