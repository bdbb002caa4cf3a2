#ifndef HEIGHTS_ERRORS_HPP
#define HEIGHTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heights {

// Root of the library's error hierarchy. Exit-code mapping in the CLI keys on
// the concrete type, so callers can catch precisely the signal they expect.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPlace : Error { using Error::Error; };
struct InfiniteValuation : Error { using Error::Error; };
struct MixedPlaceComparison : Error { using Error::Error; };
struct NumberTooLarge : Error { using Error::Error; };

struct InvalidField : Error { using Error::Error; };
struct NotSplit : Error { using Error::Error; };
struct UnsupportedHensel : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct InvalidPoint : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct IndeterminacyPoint : Error { using Error::Error; };

struct DegreeMismatch : Error { using Error::Error; };
struct PullbackNotDefined : Error { using Error::Error; };
// Thrown when a generating family evaluates to all zeros at a point where the
// divisor section does not vanish; the presentation fails to generate there
// and no finite or infinite lambda value is faithful.
struct DegeneratePresentation : Error { using Error::Error; };

struct OnSubscheme : Error { using Error::Error; };
struct IdenticalPoints : Error { using Error::Error; };

struct SampleExhausted : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };

struct SchemaError : Error { using Error::Error; };
struct DuplicateName : Error { using Error::Error; };

} // namespace heights

#endif
