// interface.hpp -- terms and canonical forms of the distributive right
// progression ring over single-character constants.
//
// An interface is a finite set of words over the 64-character alphabet
// {a..z, A..Z, 0..9, ':', '.'}.  A word may carry a trailing deadlock
// marker (the ring has delta.X = delta but no X.delta = delta, so a
// word followed by delta is a distinct element).  The empty set is the
// empty interface delta itself.

#ifndef ISC_INTERFACE_HPP
#define ISC_INTERFACE_HPP

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isc {

// ── alphabet ────────────────────────────────────────────────────────────────

// V_LDCP: letters, digits, colon, period.
inline bool is_constant_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == ':' || c == '.';
}

// V_L: the letters (admissible first character of foci and methods).
inline bool is_letter_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// ── errors ──────────────────────────────────────────────────────────────────

struct ParseError : std::runtime_error {
  std::size_t position;  // 0-based offset into the input text
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

struct InterfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ── terms ───────────────────────────────────────────────────────────────────

struct TermExpr;
using TermPtr = std::shared_ptr<const TermExpr>;

// Closed term over delta, single-character constants, + and (.) .
struct TermExpr {
  enum class Kind { Delta, Atom, Sum, Seq };
  Kind kind;
  char atom = 0;       // valid for Atom
  TermPtr lhs, rhs;    // valid for Sum/Seq
};

TermPtr make_delta();
TermPtr make_atom(char c);
TermPtr make_sum(TermPtr lhs, TermPtr rhs);
TermPtr make_seq(TermPtr lhs, TermPtr rhs);

// ── canonical form ──────────────────────────────────────────────────────────

struct Word {
  std::string letters;     // nonempty, all constant chars
  bool deadlocked = false; // true iff the word's product ends in delta

  auto operator<=>(const Word&) const = default;
};

// Normal form of a closed term: a set of words.  Two interfaces are
// equal iff their word sets are; the set order is the render order
// (a plain word immediately precedes its deadlocked twin).
struct CanonicalInterface {
  std::set<Word> words;

  bool operator==(const CanonicalInterface&) const = default;
  bool empty() const { return words.empty(); }
  std::size_t size() const { return words.size(); }
};

// ── operations ──────────────────────────────────────────────────────────────

// Concrete syntax:  expr := term ('+' term)* ; term := factor+ ;
// factor := constant-char | '@' | '(' expr ')'.  '@' is delta,
// juxtaposition is sequential composition, whitespace is ignored.
TermPtr parse_interface(std::string_view text);

CanonicalInterface normalize(const TermPtr& t);

// Convenience: normalize(parse_interface(text)).
CanonicalInterface interface_of(std::string_view text);

// The interface consisting of the single plain word beta.
CanonicalInterface word_interface(std::string_view beta);

// Alternative composition: set union.
CanonicalInterface sum(const CanonicalInterface& x, const CanonicalInterface& y);

// Sequential composition.  Deadlocked words of x absorb y; composing a
// plain word with the empty interface marks it deadlocked.
CanonicalInterface seq(const CanonicalInterface& x, const CanonicalInterface& y);

// x + y = y, i.e. subset order.
bool leq(const CanonicalInterface& x, const CanonicalInterface& y);

// beta-derivative: the largest Y with Y = delta or X + beta.Y <= X.
CanonicalInterface derivative(std::string_view beta, const CanonicalInterface& x);

// beta-filter-complement: removes the words that have beta as an
// initial segment.  A trailing deadlock marker absorbs any remaining
// filter suffix, so a deadlocked word is also removed when its letters
// are a proper prefix of beta.
CanonicalInterface filter_complement(std::string_view beta, const CanonicalInterface& x);

// Focus-method interface: every word is plain, has exactly one period,
// and focus and method parts are nonempty and start with a letter.
bool is_fmi(const CanonicalInterface& x);

// Groups the words of a nonempty FMI by focus; the mapped value holds
// the method words.  Throws InterfaceError otherwise.
std::map<std::string, CanonicalInterface> fmi_split(const CanonicalInterface& x);

// Method interface: every word is plain and period-free.
bool is_mi(const CanonicalInterface& x);

// Deterministic text form; parse + normalize inverts it.
std::string render(const CanonicalInterface& x);

}  // namespace isc

#endif  // ISC_INTERFACE_HPP
