#ifndef CHROMALIE_ERRORS_HPP
#define CHROMALIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromalie {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sigma form was evaluated outside its declared finite support.
/// The caller is expected to enlarge the table and retry.
struct SupportMissError : Error {
    using Error::Error;
};

/// A construction was invoked on inputs violating its hypotheses
/// (non-endomorphism twist, non-multiplier sigma, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed input text. line/column are 1-based; -1 when not applicable.
struct ParseError : Error {
    int line = -1;
    int column = -1;
    ParseError(const std::string& msg, int l = -1, int c = -1)
        : Error(msg), line(l), column(c) {}
};

} // namespace chromalie

#endif
