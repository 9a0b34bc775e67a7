#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projstat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PROJSTAT_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

PROJSTAT_DEFINE_ERROR(DivisibilityError)
PROJSTAT_DEFINE_ERROR(GroupMismatchError)
PROJSTAT_DEFINE_ERROR(MembershipError)
PROJSTAT_DEFINE_ERROR(BudgetExceededError)
PROJSTAT_DEFINE_ERROR(RangeError)
PROJSTAT_DEFINE_ERROR(OrderScopeError)
PROJSTAT_DEFINE_ERROR(ScopeError)
PROJSTAT_DEFINE_ERROR(ConductorMismatchError)
PROJSTAT_DEFINE_ERROR(NonMonomialBaseError)
PROJSTAT_DEFINE_ERROR(ConstantTermError)
PROJSTAT_DEFINE_ERROR(RegionError)
PROJSTAT_DEFINE_ERROR(CharacterConditionError)
PROJSTAT_DEFINE_ERROR(CompositionError)
PROJSTAT_DEFINE_ERROR(ShapeMismatchError)

#undef PROJSTAT_DEFINE_ERROR

/// Malformed window or descriptor text; `position` is the 0-based offset
/// of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace projstat
