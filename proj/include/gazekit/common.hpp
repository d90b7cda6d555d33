// Copyright 2026-present the gazekit project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gazekit {

/// Error categories surfaced through gazekit::Error. Every throwing
/// operation documents which codes it can raise.
enum class ErrorCode {
    DegenerateGaze,
    InvalidDistance,
    MissingEyes,
    ShapeMismatch,
    TimestepOutOfRange,
    TimestepOrder,
    MissingGroundTruth,
    InvalidT,
    TooManyObjects,
    DegenerateProjection,
    DegenerateMean,
    DegenerateEyes,
    NonFiniteLoss,
    IOFailure,
    CorruptFile,
    VersionMismatch,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateGaze: return "DegenerateGaze";
        case ErrorCode::InvalidDistance: return "InvalidDistance";
        case ErrorCode::MissingEyes: return "MissingEyes";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::TimestepOutOfRange: return "TimestepOutOfRange";
        case ErrorCode::TimestepOrder: return "TimestepOrder";
        case ErrorCode::MissingGroundTruth: return "MissingGroundTruth";
        case ErrorCode::InvalidT: return "InvalidT";
        case ErrorCode::TooManyObjects: return "TooManyObjects";
        case ErrorCode::DegenerateProjection: return "DegenerateProjection";
        case ErrorCode::DegenerateMean: return "DegenerateMean";
        case ErrorCode::DegenerateEyes: return "DegenerateEyes";
        case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
        case ErrorCode::IOFailure: return "IOFailure";
        case ErrorCode::CorruptFile: return "CorruptFile";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

#define GZK_CHECK(cond, code, msg)                  \
    do {                                            \
        if (!(cond)) ::gazekit::raise((code), (msg)); \
    } while (0)

constexpr double kPi = 3.14159265358979323846;

inline double deg_from_rad(double r) { return r * (180.0 / kPi); }
inline double rad_from_deg(double d) { return d * (kPi / 180.0); }

}  // namespace gazekit
