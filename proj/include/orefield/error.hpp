/*
   Copyright 2026 The orefield Authors

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

#ifndef OREFIELD_ERROR_HPP
#define OREFIELD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orefield {

enum class Errc {
    NotAnAutomorphism,
    InfiniteOrder,
    ReduciblePolynomial,
    NotCentral,
    MixedFields,
    DivisionByZero,
    CapExceeded,
    ZeroSeries,
    InsufficientPrecision,
    NotSimpleRoot,
    NoResidualRoot,
    MixedScenarios,
    SingularElement,
    UnknownGroupElement,
    NotPolynomial,
    NotInvariantSeries,
    NotInBaseField,
    EmbeddingMissing,
    UnknownCatalogEntry,
    SyntaxError,
    InvalidScenario,
    ValidationFailed,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
        case Errc::InfiniteOrder: return "InfiniteOrder";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::NotCentral: return "NotCentral";
        case Errc::MixedFields: return "MixedFields";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::ZeroSeries: return "ZeroSeries";
        case Errc::InsufficientPrecision: return "InsufficientPrecision";
        case Errc::NotSimpleRoot: return "NotSimpleRoot";
        case Errc::NoResidualRoot: return "NoResidualRoot";
        case Errc::MixedScenarios: return "MixedScenarios";
        case Errc::SingularElement: return "SingularElement";
        case Errc::UnknownGroupElement: return "UnknownGroupElement";
        case Errc::NotPolynomial: return "NotPolynomial";
        case Errc::NotInvariantSeries: return "NotInvariantSeries";
        case Errc::NotInBaseField: return "NotInBaseField";
        case Errc::EmbeddingMissing: return "EmbeddingMissing";
        case Errc::UnknownCatalogEntry: return "UnknownCatalogEntry";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::InvalidScenario: return "InvalidScenario";
        case Errc::ValidationFailed: return "ValidationFailed";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error(Errc::SyntaxError,
                message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace orefield

#endif  // OREFIELD_ERROR_HPP
