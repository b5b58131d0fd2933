// isc -- command line front end: interface algebra, PGLB analysis,
// thread extraction and component compositions.
//
// Exit codes: 0 success / predicate true, 1 predicate false or
// non-matching composition, 2 input error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "isc/component.hpp"
#include "isc/interface.hpp"
#include "isc/pglb.hpp"
#include "isc/service.hpp"
#include "isc/thread.hpp"

namespace {

constexpr std::size_t kDefaultBudget = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open file: " + path);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

struct Args {
  std::vector<std::string> positional;
  std::size_t budget = kDefaultBudget;
  std::vector<std::pair<std::string, std::string>> services;  // focus -> spec
};

Args parse_args(int argc, char** argv, int first) {
  Args a;
  for (int i = first; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--budget") {
      if (++i >= argc) throw UsageError("--budget needs a value");
      a.budget = std::stoul(argv[i]);
    } else if (arg == "--service") {
      if (++i >= argc) throw UsageError("--service needs <focus>=<spec>");
      std::string v = argv[i];
      std::size_t eq = v.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("--service expects <focus>=<spec>");
      a.services.emplace_back(v.substr(0, eq), v.substr(eq + 1));
    } else {
      a.positional.push_back(std::move(arg));
    }
  }
  return a;
}

void need(const Args& a, std::size_t n, const char* usage) {
  if (a.positional.size() != n)
    throw UsageError(std::string("usage: isc ") + usage);
}

int print_bool(bool b) {
  std::cout << (b ? "true" : "false") << "\n";
  return b ? 0 : 1;
}

int cmd_classify(const isc::CanonicalInterface& x) {
  std::size_t n = x.size();
  if (isc::is_fmi(x)) {
    std::cout << "FMI, " << n << " words\n";
    if (!x.empty())
      for (const auto& [focus, methods] : isc::fmi_split(x))
        std::cout << "focus " << focus << ": " << methods.size() << " words\n";
  } else if (isc::is_mi(x)) {
    std::cout << "MI, " << n << " words\n";
  } else {
    std::cout << "neither, " << n << " words\n";
  }
  return 0;
}

int cmd_check(const Args& a) {
  need(a, 3, "check <mode> <interface-expr> <pglb-file>");
  isc::CanonicalInterface i = isc::interface_of(a.positional[1]);
  isc::Program p = isc::parse_pglb(read_file(a.positional[2]));
  const std::string& mode = a.positional[0];
  if (mode == "properly-subrequires")
    return print_bool(isc::properly_subrequires(p, i));
  isc::InseqComponent c{i, p, isc::parse_mode(mode)};
  return print_bool(isc::validate(c).ok);
}

int cmd_use(const Args& a) {
  need(a, 3, "use <component-file> <focus> <service-spec> [--budget N]");
  isc::InseqComponent c = isc::parse_component_bundle(read_file(a.positional[0]));
  isc::ServiceComponent s = isc::parse_service_spec(a.positional[2]);
  isc::UseCompositionResult r =
      isc::use_component(c, a.positional[1], s, a.budget);
  if (!r.matching) {
    std::cout << "non-matching\ninterface: @\nthread:\nn0: D\n";
    return 1;
  }
  std::cout << "matching\ninterface: " << isc::render(r.interface) << "\n";
  if (r.outcome.kind == isc::UseOutcome::Kind::BudgetExhausted) {
    std::cout << "budget exhausted\n";
    return 3;
  }
  std::cout << "thread:\n" << isc::render_thread(r.outcome.graph);
  return 0;
}

int cmd_apply(const Args& a) {
  need(a, 3, "apply <component-file> <focus> <service-spec> [--budget N]");
  isc::InseqComponent c = isc::parse_component_bundle(read_file(a.positional[0]));
  isc::ServiceComponent s = isc::parse_service_spec(a.positional[2]);
  isc::ApplyCompositionResult r =
      isc::apply_component(c, a.positional[1], s, a.budget);
  if (!r.matching) {
    std::cout << "non-matching\ninterface: @\nservice: empty\n";
    return 1;
  }
  std::cout << "matching\ninterface: " << isc::render(r.interface) << "\n";
  if (r.outcome.kind == isc::ApplyOutcome::Kind::BudgetExhausted) {
    std::cout << "budget exhausted\n";
    return 3;
  }
  std::cout << "service: " << r.outcome.service->describe() << "\n";
  return 0;
}

std::string instruction_token(const isc::Instruction& ins) {
  isc::Program one;
  one.instructions.push_back(ins);
  return isc::render_pglb(one);
}

int cmd_run(const Args& a) {
  need(a, 1, "run <pglb-file> --service <focus>=<service-spec> [--budget N]");
  isc::Program p = isc::parse_pglb(read_file(a.positional[0]));
  std::map<std::string, isc::Service> services;
  for (const auto& [focus, spec] : a.services)
    services.insert_or_assign(focus, isc::parse_service_spec(spec).body);

  long pc = 1;
  const long len = static_cast<long>(p.length());
  for (std::size_t steps = 0; steps < a.budget; ++steps) {
    if (pc < 1 || pc > len) {
      std::cout << "deadlock (D)\n";
      return 0;
    }
    const isc::Instruction& ins = p.instructions[static_cast<std::size_t>(pc - 1)];
    std::cout << pc << ": " << instruction_token(ins);
    switch (ins.kind) {
      case isc::Instruction::Kind::Halt:
        std::cout << "\nterminated (S)\n";
        return 0;
      case isc::Instruction::Kind::FwdJump:
        std::cout << "\n";
        if (ins.k == 0) {
          std::cout << "deadlock (D)\n";
          return 0;
        }
        pc += static_cast<long>(ins.k);
        break;
      case isc::Instruction::Kind::BwdJump:
        std::cout << "\n";
        if (ins.k == 0) {
          std::cout << "deadlock (D)\n";
          return 0;
        }
        pc -= static_cast<long>(ins.k);
        break;
      default: {
        auto it = services.find(ins.fm.focus);
        if (it == services.end()) {
          std::cout << " -> no service for focus " << ins.fm.focus
                    << "\ndeadlock (D)\n";
          return 0;
        }
        auto reply = it->second.step(ins.fm.method);
        if (!reply) {
          std::cout << " -> method not provided\ndeadlock (D)\n";
          return 0;
        }
        std::cout << " -> " << (reply->value ? "true" : "false") << "\n";
        it->second = reply->next;
        bool skip;
        switch (ins.kind) {
          case isc::Instruction::Kind::PosTest: skip = !reply->value; break;
          case isc::Instruction::Kind::NegTest: skip = reply->value; break;
          default:                              skip = false; break;
        }
        pc += skip ? 2 : 1;
        break;
      }
    }
  }
  std::cerr << "budget exhausted\n";
  return 3;
}

int dispatch(int argc, char** argv) {
  if (argc < 2)
    throw UsageError(
        "usage: isc <normalize|eq|leq|derive|filter|classify|pglb|extract|"
        "check|use|apply|run> ...");
  std::string cmd = argv[1];
  Args a = parse_args(argc, argv, 2);

  if (cmd == "normalize") {
    need(a, 1, "normalize <expr>");
    std::cout << isc::render(isc::interface_of(a.positional[0])) << "\n";
    return 0;
  }
  if (cmd == "eq") {
    need(a, 2, "eq <expr> <expr>");
    return print_bool(isc::interface_of(a.positional[0]) ==
                      isc::interface_of(a.positional[1]));
  }
  if (cmd == "leq") {
    need(a, 2, "leq <expr> <expr>");
    return print_bool(isc::leq(isc::interface_of(a.positional[0]),
                               isc::interface_of(a.positional[1])));
  }
  if (cmd == "derive") {
    need(a, 2, "derive <beta> <expr>");
    std::cout << isc::render(isc::derivative(a.positional[0],
                                             isc::interface_of(a.positional[1])))
              << "\n";
    return 0;
  }
  if (cmd == "filter") {
    need(a, 2, "filter <beta> <expr>");
    std::cout << isc::render(isc::filter_complement(
                     a.positional[0], isc::interface_of(a.positional[1])))
              << "\n";
    return 0;
  }
  if (cmd == "classify") {
    need(a, 1, "classify <expr>");
    return cmd_classify(isc::interface_of(a.positional[0]));
  }
  if (cmd == "pglb") {
    need(a, 2, "pglb <parse|render|basics> <file>");
    isc::Program p = isc::parse_pglb(read_file(a.positional[1]));
    if (a.positional[0] == "parse") {
      std::cout << p.length() << " instructions\n" << isc::render_pglb(p) << "\n";
    } else if (a.positional[0] == "render") {
      std::cout << isc::render_pglb(p) << "\n";
    } else if (a.positional[0] == "basics") {
      std::cout << isc::render(isc::occurring_basics(p)) << "\n";
    } else {
      throw UsageError("usage: isc pglb <parse|render|basics> <file>");
    }
    return 0;
  }
  if (cmd == "extract") {
    need(a, 1, "extract <file>");
    std::cout << isc::render_thread(
        isc::extract(isc::parse_pglb(read_file(a.positional[0]))));
    return 0;
  }
  if (cmd == "check") return cmd_check(a);
  if (cmd == "use") return cmd_use(a);
  if (cmd == "apply") return cmd_apply(a);
  if (cmd == "run") return cmd_run(a);
  throw UsageError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
