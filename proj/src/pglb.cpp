#include "isc/pglb.hpp"

#include <cctype>

namespace isc {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_fm_char(char c) {  // V_LDC
  return is_constant_char(c) && c != '.';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  void skip_ws() {
    while (pos < text.size() && is_ws(text[pos])) ++pos;
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

std::string parse_fm_part(Cursor& c, const char* what) {
  std::size_t start = c.pos;
  while (c.pos < c.text.size() && is_fm_char(c.text[c.pos])) ++c.pos;
  std::string part(c.text.substr(start, c.pos - start));
  if (part.empty()) c.fail(std::string("expected a ") + what);
  if (!is_letter_char(part[0]))
    throw ParseError(std::string(what) + " must start with a letter at position " +
                         std::to_string(start),
                     start);
  return part;
}

FocusMethod parse_focus_method(Cursor& c) {
  FocusMethod fm;
  fm.focus = parse_fm_part(c, "focus");
  if (c.done() || c.peek() != '.') c.fail("expected '.' after focus");
  ++c.pos;
  fm.method = parse_fm_part(c, "method");
  return fm;
}

unsigned long parse_counter(Cursor& c) {
  std::size_t start = c.pos;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    ++c.pos;
  if (c.pos == start) c.fail("expected a jump counter");
  return std::stoul(std::string(c.text.substr(start, c.pos - start)));
}

Instruction parse_instruction(Cursor& c) {
  c.skip_ws();
  if (c.done()) c.fail("expected an instruction");
  Instruction ins{};
  switch (c.peek()) {
    case '!':
      ++c.pos;
      ins.kind = Instruction::Kind::Halt;
      break;
    case '#':
      ++c.pos;
      ins.kind = Instruction::Kind::FwdJump;
      ins.k = parse_counter(c);
      break;
    case '\\':
      ++c.pos;
      if (c.done() || c.peek() != '#') c.fail("expected '#' after '\\'");
      ++c.pos;
      ins.kind = Instruction::Kind::BwdJump;
      ins.k = parse_counter(c);
      break;
    case '+':
      ++c.pos;
      ins.kind = Instruction::Kind::PosTest;
      ins.fm = parse_focus_method(c);
      break;
    case '-':
      ++c.pos;
      ins.kind = Instruction::Kind::NegTest;
      ins.fm = parse_focus_method(c);
      break;
    default:
      ins.kind = Instruction::Kind::Basic;
      ins.fm = parse_focus_method(c);
      break;
  }
  c.skip_ws();
  return ins;
}

}  // namespace

Program parse_pglb(std::string_view text) {
  Cursor c{text};
  Program p;
  p.instructions.push_back(parse_instruction(c));
  while (!c.done()) {
    if (c.peek() != ';') c.fail("expected ';' between instructions");
    ++c.pos;
    p.instructions.push_back(parse_instruction(c));
  }
  return p;
}

std::string render_pglb(const Program& p) {
  std::string out;
  for (const Instruction& ins : p.instructions) {
    if (!out.empty()) out += ';';
    switch (ins.kind) {
      case Instruction::Kind::Basic:   out += ins.fm.dotted(); break;
      case Instruction::Kind::PosTest: out += '+'; out += ins.fm.dotted(); break;
      case Instruction::Kind::NegTest: out += '-'; out += ins.fm.dotted(); break;
      case Instruction::Kind::FwdJump: out += '#'; out += std::to_string(ins.k); break;
      case Instruction::Kind::BwdJump: out += "\\#"; out += std::to_string(ins.k); break;
      case Instruction::Kind::Halt:    out += '!'; break;
    }
  }
  return out;
}

CanonicalInterface occurring_basics(const Program& p) {
  CanonicalInterface r;
  for (const Instruction& ins : p.instructions) {
    switch (ins.kind) {
      case Instruction::Kind::Basic:
      case Instruction::Kind::PosTest:
      case Instruction::Kind::NegTest:
        r.words.insert(Word{ins.fm.dotted(), false});
        break;
      default:
        break;
    }
  }
  return r;
}

bool in_notation(const Program& p, const CanonicalInterface& i) {
  if (!is_fmi(i))
    throw InterfaceError("in_notation: interface is not an FMI: " + render(i));
  return leq(occurring_basics(p), i);
}

}  // namespace isc
