/*
   Copyright 2026 the zprconv authors

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

#ifndef ZPRCONV_ERRORS_HPP
#define ZPRCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zprconv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("operands belong to different rings") {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is the zero polynomial") {}
};

struct NilpotentDenominator : Error {
    NilpotentDenominator() : Error("denominator vanishes mod p and is nilpotent in the Laurent ring") {}
};

struct NotFullRowRank : Error {
    NotFullRowRank() : Error("matrix does not have full row rank") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular mod p") {}
};

struct BoundTooSmall : Error {
    explicit BoundTooSmall(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("operand dimensions do not match") {}
};

struct NotConstant : Error {
    NotConstant() : Error("matrix has non-constant polynomial entries") {}
};

struct NotFree : Error {
    NotFree() : Error("code is not free") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace zprconv

#endif
