#pragma once

#include <stdexcept>
#include <string>

namespace qtm {

// Exit codes used by the CLI; library code throws the matching exception.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kResourceError = 3,
  kIncompleteCover = 4,
  kVerifyError = 5,
  kDomainError = 6,
  kStoreError = 7,
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State outside the subgroup an operation is defined on.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StoreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompleteCoverError : std::runtime_error {
  explicit IncompleteCoverError(std::uint64_t left)
      : std::runtime_error("cover incomplete: " + std::to_string(left) +
                           " positions left"),
        positions_left(left) {}
  std::uint64_t positions_left;
};

}  // namespace qtm
