#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wildgoppa {

/// Bad input: a violated precondition, malformed argument or inconsistent shapes.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `position` is the 0-based character offset of the fault.
class ParseError : public InputError {
   public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// A verifier observed a violation of a proved identity. This signals a bug in the
/// library, never bad input, and is kept apart from InputError on purpose.
class TheoremFalsification : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace wildgoppa
