// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#pragma once

#include <stdexcept>
#include <string>

namespace coexsim {

/// Base class for every error raised by the library. The CLI maps
/// subclasses to exit codes; messages carry the offending field or value.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InsufficientAntennas : Error { using Error::Error; };
struct InsufficientDoF : Error { using Error::Error; };
struct InvalidGeometry : Error { using Error::Error; };
struct NoSamples : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct InvalidCsi : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };
struct NotTransmitting : Error { using Error::Error; };
struct UndefinedMetric : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace coexsim
