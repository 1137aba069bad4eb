#pragma once

#include <stdexcept>
#include <string>

namespace ddpc {

// A caller-facing hypothesis does not hold (degree bound, sizes, ranges).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A proof-guaranteed step failed. Indicates a bug, not bad input.
class internal_defect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ddpc

#define DDPC_REQUIRE(cond, msg) \
  do {                          \
    if (!(cond)) throw ::ddpc::precondition_error(msg); \
  } while (0)

#define DDPC_ENSURE(cond, msg) \
  do {                         \
    if (!(cond)) throw ::ddpc::internal_defect(msg); \
  } while (0)
