#pragma once

#include <stdexcept>
#include <string>

namespace tatekit {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TATEKIT_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    explicit Name(const std::string& what = #Name) : Error(what) {}  \
  }

TATEKIT_DEFINE_ERROR(GroupTooLarge);
TATEKIT_DEFINE_ERROR(GroupMismatch);
TATEKIT_DEFINE_ERROR(IncompatibleMap);
TATEKIT_DEFINE_ERROR(EmptySet);
TATEKIT_DEFINE_ERROR(DegreeOutOfWindow);
TATEKIT_DEFINE_ERROR(NormNotZero);
TATEKIT_DEFINE_ERROR(NotNormal);
TATEKIT_DEFINE_ERROR(SquareDoesNotCommute);
TATEKIT_DEFINE_ERROR(InvalidXi);
TATEKIT_DEFINE_ERROR(WindowTooWide);
TATEKIT_DEFINE_ERROR(ClassMismatch);
TATEKIT_DEFINE_ERROR(EmptyS);
TATEKIT_DEFINE_ERROR(PlaceNotInS);
TATEKIT_DEFINE_ERROR(InvalidTower);
TATEKIT_DEFINE_ERROR(ParseError);
TATEKIT_DEFINE_ERROR(UnresolvedReference);
TATEKIT_DEFINE_ERROR(UnknownSuite);

#undef TATEKIT_DEFINE_ERROR

}  // namespace tatekit
