// Copyright 2026 The Level01 Authors.
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

#ifndef LEVEL01_ERRORS_H_
#define LEVEL01_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace level01 {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed program or goal text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A clause that cannot be added to a definition.
class DefinitionError : public Error {
 public:
  using Error::Error;
};

// Beta reduction did not reach a normal form within its step budget.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Fatal proof-search errors. Any of these aborts the whole query.
class EngineError : public Error {
 public:
  using Error::Error;
};

class NonPureGoalError : public EngineError {
 public:
  NonPureGoalError()
      : EngineError("non-pure term found in implicational goal.") {}
};

class NonPatternError : public EngineError {
 public:
  explicit NonPatternError(const std::string& term)
      : EngineError("unification problem outside the pattern fragment: " +
                    term) {}
};

class UndefinedPredicateError : public EngineError {
 public:
  explicit UndefinedPredicateError(const std::string& predicate)
      : EngineError("undefined predicate: " + predicate) {}
};

class LevelError : public EngineError {
 public:
  using EngineError::EngineError;
};

class BudgetExceededError : public EngineError {
 public:
  BudgetExceededError() : EngineError("step budget exhausted.") {}
};

}  // namespace level01

#endif  // LEVEL01_ERRORS_H_
