#pragma once

#include <stdexcept>

namespace mstrep {

/// Thrown when a caller breaks a documented precondition. These checks stay
/// on in release builds.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mstrep

#define MSTREP_EXPECTS(cond, msg)                                         \
  do {                                                                    \
    if (!(cond)) [[unlikely]]                                             \
      throw ::mstrep::ContractViolation(std::string(__func__) + ": " + (msg)); \
  } while (false)
