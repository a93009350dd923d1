/*
   Copyright 2026 The selfdual Authors

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

#ifndef SELFDUAL_ERROR_HPP
#define SELFDUAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfdual {

enum class ErrorCode {
    NotPrime,
    DegreeZero,
    SizeGuardExceeded,
    FactorizationGuardExceeded,
    ZeroElement,
    OrderDoesNotDivide,
    DiscreteLogGuardExceeded,
    GuardExceeded,
    NotOddPrime,
    EvenModulus,
    NotDivisor,
    EvenN,
    NotCoprime,
    ZeroInSet,
    RootsNotInField,
    NotDividing,
    NotOverTower,
    NoCyclicStructure,
    NoSolution,
    NoGamma,
    CharDividesN,
    PreconditionFailed,
    OddLength,
    TooLong,
    DuplicatePoints,
    SplittingFailed,
    VerificationFailed,
    NotIrreducible,
    MalformedInput,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
        case ErrorCode::FactorizationGuardExceeded: return "FactorizationGuardExceeded";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case ErrorCode::DiscreteLogGuardExceeded: return "DiscreteLogGuardExceeded";
        case ErrorCode::GuardExceeded: return "GuardExceeded";
        case ErrorCode::NotOddPrime: return "NotOddPrime";
        case ErrorCode::EvenModulus: return "EvenModulus";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ZeroInSet: return "ZeroInSet";
        case ErrorCode::RootsNotInField: return "RootsNotInField";
        case ErrorCode::NotDividing: return "NotDividing";
        case ErrorCode::NotOverTower: return "NotOverTower";
        case ErrorCode::NoCyclicStructure: return "NoCyclicStructure";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::NoGamma: return "NoGamma";
        case ErrorCode::CharDividesN: return "CharDividesN";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::SplittingFailed: return "SplittingFailed";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code next to the message.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace selfdual

#endif
