// Copyright 2026 The qtab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTAB_ERRORS_H
#define QTAB_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
   public:
    using Error::Error;
};

class Unsolvable : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class InvalidDimension : public Error {
   public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

class ControlEqualsTarget : public Error {
   public:
    using Error::Error;
};

/// Raised by operations that need a field (prime d) when d is composite.
class CompositeDimension : public Error {
   public:
    using Error::Error;
};

class NotFullTableau : public Error {
   public:
    using Error::Error;
};

class InvalidTableau : public Error {
   public:
    using Error::Error;
};

class InconsistentSystem : public Error {
   public:
    using Error::Error;
};

class TooLarge : public Error {
   public:
    using Error::Error;
};

class InvalidProbability : public Error {
   public:
    using Error::Error;
};

class NoMeasurement : public Error {
   public:
    using Error::Error;
};

/// A circuit with measurements or noise has no unitary inverse.
class NotInvertibleCircuit : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {
    }
    std::size_t line() const {
        return line_;
    }
    const std::string &reason() const {
        return reason_;
    }

   private:
    std::size_t line_;
    std::string reason_;
};

}  // namespace qtab

#endif
