#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace ringlab {

// Every failure the library reports carries a machine-readable code plus the
// witness data that triggered it, so callers (and the CLI) can print exactly
// which axiom broke and where.
class RingError : public std::runtime_error {
 public:
  enum class Code {
    BadShape,             // tables not order x order, or entry out of range
    NotAGroup,            // additive axiom violated (axiom() says which)
    NotAssociative,       // mul[mul[a][b]][c] != mul[a][mul[b][c]]
    NotDistributive,      // axiom() is "left" or "right"
    ZeroAnnihilation,     // mul[0][x] != 0 or mul[x][0] != 0 cross-check
    NotClosed,            // subset not closed; axiom() names the operation
    NotALeftZeroDivisor,  // coset partition base element is not a left ZD
    ZeroArgument,         // cancellability queried at 0
    NoZeroDivisors,       // theorem trace on a ring with no zero divisors
    InternalCheckFailed,  // a proof-step verification failed (a bug, not math)
    CapExceeded,          // construction would exceed the element cap
    DepthExceeded,        // enumeration order outside the supported range
    ParseError,           // ring spec expression syntax error
    BadInput,             // anything else wrong with caller-supplied data
  };

  RingError(Code code, std::string message, std::string axiom = {},
            std::array<int, 3> witness = {-1, -1, -1}, int position = -1)
      : std::runtime_error(std::move(message)),
        code_(code),
        axiom_(std::move(axiom)),
        witness_(witness),
        position_(position) {}

  Code code() const noexcept { return code_; }
  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }
  int position() const noexcept { return position_; }

 private:
  Code code_;
  std::string axiom_;
  std::array<int, 3> witness_;
  int position_;
};

}  // namespace ringlab
