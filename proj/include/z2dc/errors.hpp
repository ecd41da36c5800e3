/*
   Copyright 2026 The z2dc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef Z2DC_ERRORS_HPP
#define Z2DC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace z2dc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic precondition violated (division by zero polynomial, gcd(0, 0), theta(0), ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Element has no inverse modulo the given modulus; carries gcd(p, modulus) in text form.
class NotInvertibleError : public Error {
   public:
    NotInvertibleError(const std::string& what, std::string gcd_text)
        : Error(what + " (gcd = " + gcd_text + ")"), gcd_(std::move(gcd_text)) {}
    const std::string& gcd() const noexcept { return gcd_; }

   private:
    std::string gcd_;
};

enum class ValidationKind {
    NotADivisorLeft,
    NotADivisorRight,
    CompatibilityViolation,
    UnsupportedDegenerateLength,
    ParameterMismatch,
    InvalidArgument,
};

const char* to_string(ValidationKind kind) noexcept;

/// Rejected user input: an invalid generator triple, bad lengths or a malformed message.
/// For CompatibilityViolation `detail()` holds the nonzero remainder.
class ValidationError : public Error {
   public:
    ValidationError(ValidationKind kind, const std::string& message, std::string detail = {})
        : Error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(std::move(detail)) {}
    ValidationKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    ValidationKind kind_;
    std::string detail_;
};

/// An exhaustive computation would exceed its size cap.
class CapExceededError : public Error {
   public:
    using Error::Error;
};

/// A result that the algebra guarantees failed to materialize. Signals a bug.
class InternalInconsistency : public Error {
   public:
    using Error::Error;
};

inline const char* to_string(ValidationKind kind) noexcept {
    switch (kind) {
        case ValidationKind::NotADivisorLeft: return "NotADivisorLeft";
        case ValidationKind::NotADivisorRight: return "NotADivisorRight";
        case ValidationKind::CompatibilityViolation: return "CompatibilityViolation";
        case ValidationKind::UnsupportedDegenerateLength: return "UnsupportedDegenerateLength";
        case ValidationKind::ParameterMismatch: return "ParameterMismatch";
        case ValidationKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace z2dc

#endif
