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

#ifndef SYMDOC_FILE_IO_H_
#define SYMDOC_FILE_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace symdoc {

// Both throw IoWriteError.
void WriteFile(const std::filesystem::path& path, std::string_view bytes);
// Writes a sibling temporary and renames it over `path`.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view bytes);

// Throws IoWriteError.
void CreateDirectories(const std::filesystem::path& dir);

std::optional<std::string> ReadWholeFile(const std::filesystem::path& path);

}  // namespace symdoc

#endif  // SYMDOC_FILE_IO_H_
