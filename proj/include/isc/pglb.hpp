// pglb.hpp -- the instruction sequence notation PGLB in focus-method
// notation: basic instructions f.m, test instructions +f.m / -f.m,
// forward jumps #k, backward jumps \#k and termination !.

#ifndef ISC_PGLB_HPP
#define ISC_PGLB_HPP

#include <string>
#include <string_view>
#include <vector>

#include "isc/interface.hpp"

namespace isc {

struct FocusMethod {
  std::string focus;   // nonempty, leading letter, V_LDC characters
  std::string method;  // same constraint

  std::string dotted() const { return focus + "." + method; }
  auto operator<=>(const FocusMethod&) const = default;
};

struct Instruction {
  enum class Kind { Basic, PosTest, NegTest, FwdJump, BwdJump, Halt };
  Kind kind;
  FocusMethod fm;      // valid for Basic/PosTest/NegTest
  unsigned long k = 0; // valid for FwdJump/BwdJump

  bool operator==(const Instruction&) const = default;
};

// Nonempty ';'-separated sequence of primitive instructions.
struct Program {
  std::vector<Instruction> instructions;

  std::size_t length() const { return instructions.size(); }
  bool operator==(const Program&) const = default;
};

// Instruction tokens: f.m | +f.m | -f.m | #k | \#k | ! , separated by
// ';'.  Newlines count as whitespace.
Program parse_pglb(std::string_view text);

std::string render_pglb(const Program& p);

// The FMI of the basic instructions occurring in p (test instructions
// count via their underlying f.m).
CanonicalInterface occurring_basics(const Program& p);

// True iff p is a PGLB_i program, i.e. every occurring basic belongs
// to i.  Throws InterfaceError if i is not an FMI.
bool in_notation(const Program& p, const CanonicalInterface& i);

}  // namespace isc

#endif  // ISC_PGLB_HPP
