// Copyright 2026 The reqlattice Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <string>
#include <string_view>

namespace reqlattice {

/// ASCII-lowercases, collapses whitespace runs to a single space and trims.
/// Non-ASCII bytes pass through unchanged.
std::string normalizeText(std::string_view text);

/// Lowercase hex SHA-256 of the raw bytes.
std::string sha256Hex(std::string_view bytes);

/// "sha256:" + sha256Hex(normalizeText(text)); the loader's default contentHash.
std::string contentHashOf(std::string_view text);

}  // namespace reqlattice
