#pragma once

#include <stdexcept>

namespace fermidec {

// Common base so callers can catch everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroNorm : Error { using Error::Error; };
struct BadLength : Error { using Error::Error; };
struct NonPhysical : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct BadProbability : Error { using Error::Error; };
struct ZeroInitialEntanglement : Error { using Error::Error; };

}  // namespace fermidec
