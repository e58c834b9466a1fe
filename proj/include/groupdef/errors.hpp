#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupdef {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Presentation text did not match the grammar; `position` is a byte offset
// into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Coset enumeration ran out of room.  The group may be infinite or the limit
// too small; the table is never silently truncated.
struct CosetLimitExceeded : Error {
  explicit CosetLimitExceeded(std::size_t limit)
      : Error("coset limit of " + std::to_string(limit) + " cosets exceeded"),
        limit(limit) {}
  std::size_t limit;
};

// A table-based H2 computation was asked for a group larger than the
// configured ceiling.  Callers should switch to the Kunneth pipeline.
struct OrderCeilingExceeded : Error {
  OrderCeilingExceeded(std::size_t order, std::size_t ceiling)
      : Error("group order " + std::to_string(order) +
              " exceeds the H2 order ceiling of " + std::to_string(ceiling)),
        order(order),
        ceiling(ceiling) {}
  std::size_t order;
  std::size_t ceiling;
};

// d_out * d_in != 0: the chain complex handed to homology_quotient is broken.
struct ChainConditionViolated : Error {
  using Error::Error;
};

// Kunneth-mode certification needs the block-count annotation.
struct MissingPedigree : Error {
  using Error::Error;
};

}  // namespace groupdef
