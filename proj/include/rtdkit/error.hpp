// Copyright 2026 The rtdkit Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtdkit {

/// Raised for text input that does not follow the class, plan or graph
/// formats. `line()` is 1-based; 0 means the error is not tied to a line.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        _line(line)
    {
    }

    std::size_t line() const noexcept { return _line; }

private:
    std::size_t _line;
};

/// A plan that does not list every concept of the class exactly once.
class MalformedPlan : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A plan step whose point set fails to separate its concept from some
/// concept that is still untaught at that step.
class InvalidPlan : public std::runtime_error
{
public:
    InvalidPlan(std::size_t step, std::string concept_label,
                std::string witness_label)
      : std::runtime_error("step " + std::to_string(step) + " (" +
                           concept_label + ") is not a teaching set: " +
                           witness_label + " agrees on every listed point"),
        _step(step),
        _concept(std::move(concept_label)),
        _witness(std::move(witness_label))
    {
    }

    /// 0-based index of the first failing step.
    std::size_t step() const noexcept { return _step; }
    const std::string& concept_label() const noexcept { return _concept; }
    /// A later concept that agrees with the taught one on the step's set.
    const std::string& witness_label() const noexcept { return _witness; }

private:
    std::size_t _step;
    std::string _concept;
    std::string _witness;
};

/// An exhaustive procedure was asked to run beyond its configured size cap.
class CapacityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A reduction output behaved in a way the soundness argument rules out.
/// Seeing one of these means either the inputs broke a precondition or the
/// implementation is wrong; it is never a normal outcome.
class SoundnessViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace rtdkit
