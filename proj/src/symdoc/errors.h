// Copyright 2026 The symdoc Authors
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

#ifndef SYMDOC_ERRORS_H_
#define SYMDOC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace symdoc {

// Base of every failure the pipeline reports. Markup problems are never
// errors; they surface as warnings on the parsed documents instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are empty or the article stem is not `[a-z0-9_]+`.
class IoDecodeError : public Error {
 public:
  using Error::Error;
};

// No parseable article was found under the input directory.
class CorpusEmptyError : public Error {
 public:
  using Error::Error;
};

// Two definitions map onto the same SymbolId.
class DuplicateSymbolError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class IoWriteError : public Error {
 public:
  using Error::Error;
};

// A search table file is unreadable or does not follow the table format.
class InvalidTableError : public Error {
 public:
  using Error::Error;
};

// Bad configuration values (jobs == 0, base URL without trailing slash, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace symdoc

#endif  // SYMDOC_ERRORS_H_
