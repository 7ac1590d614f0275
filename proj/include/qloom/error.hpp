// Copyright 2026 The qloom developers
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

#include <stdexcept>
#include <string>

namespace qloom {

/** Base class for all qloom errors. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed or semantically invalid user input (files, flags, graphs). */
class InputError : public Error {
  public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/** A size guard refused the operation (too many qubits, nodes, ...). */
class ResourceError : public Error {
  public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

/** An internal invariant was violated; indicates a bug, not bad input. */
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace qloom
