// service.hpp -- services: a method interface plus a functional reply
// step.  A service value is immutable; stepping returns the reply and
// the successor service.  Built-ins: the empty service, boolean
// registers, the stack over {0,1,2} (and counters as all-zero stacks)
// and user-loadable finite-state services.

#ifndef ISC_SERVICE_HPP
#define ISC_SERVICE_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isc/interface.hpp"

namespace isc {

struct ServiceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Service {
 public:
  enum class Tag { Empty, BoolReg, Stack, Fsm };

  struct Reply {
    bool value;
    Service next;
  };

  static Service empty();
  static Service boolean_register(bool init);
  static Service stack(const std::vector<int>& initial);  // values in {0,1,2}
  static Service counter(std::size_t n);                  // stack of n zeros
  // Parses the FSM service file format; throws ServiceError (totality,
  // non-MI interface) or ParseError (syntax).
  static Service load_fsm(std::string_view definition);

  // Reply for a provided method, nullopt (NotProvided) otherwise.
  std::optional<Reply> step(const std::string& method) const;

  const CanonicalInterface& mi() const { return mi_; }
  Tag tag() const { return tag_; }

  // Deterministic key distinguishing states; used for product-state
  // sharing in use compositions.
  std::string state_key() const;

  // Human-readable one-line description of the current state.
  std::string describe() const;

 private:
  Service() = default;

  struct FsmDef;

  Tag tag_ = Tag::Empty;
  CanonicalInterface mi_;
  bool reg_ = false;                  // BoolReg
  std::vector<int> stack_;            // Stack; back() is the top
  std::string fsm_state_;             // Fsm
  std::shared_ptr<const FsmDef> fsm_; // Fsm
};

// H provides i: a reply is offered for every element of i.  Throws
// InterfaceError if i is not an MI.
bool provides(const Service& h, const CanonicalInterface& i);

// H superprovides i: H provides some j with i <= j.  With element-wise
// capabilities this coincides with provides.
bool superprovides(const Service& h, const CanonicalInterface& i);

}  // namespace isc

#endif  // ISC_SERVICE_HPP
