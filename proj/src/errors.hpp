#pragma once

#include <stdexcept>
#include <string>

namespace blockledger {

// Enumeration would exceed a hard element budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be read.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External data fails validation; `path` points at the offending field,
// e.g. "blocks[0].degrees[2]".
struct schema_error : std::runtime_error {
  schema_error(std::string field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what), path(std::move(field_path)) {}
  std::string path;
};

// A structural invariant the library itself guarantees was observed broken
// (corruption, not caller error).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace blockledger
