/*
 * Copyright 2026 The fastgen Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FASTGEN_FILES_HPP_
#define FASTGEN_FILES_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "fastgen/group.hpp"
#include "fastgen/protocol.hpp"

namespace fastgen {

struct PublishedStandard;
struct Trapdoor;
struct Ciphertext;

// All documents use canonical hex strings and sorted keys (nlohmann's
// default object is ordered), serialized compactly.

// {"cofactor", "f", "p", "q"}
nlohmann::json params_to_json(const GroupParams& params);
GroupParams params_from_json(const nlohmann::json& doc);

// SHA-256 (hex) of the compact parameter document.
std::string params_id(const GroupParams& params);

// {"g", "msg_a", "msg_b", "params_id"}
nlohmann::json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& doc);

// {"public", "secret"}
nlohmann::json key_to_json(const KeyPair& key);
KeyPair key_from_json(const nlohmann::json& doc);

// {"public"}: the shareable half of a key file. Reading accepts full key
// files too and ignores the secret.
nlohmann::json public_key_to_json(const Element& public_key);
Element public_key_from_json(const nlohmann::json& doc);

// {"g", "p", "q"}; the fast generator is not part of the document.
nlohmann::json standard_to_json(const PublishedStandard& standard);
PublishedStandard standard_from_json(const nlohmann::json& doc);

// {"f", "t"}
nlohmann::json trapdoor_to_json(const Trapdoor& trapdoor);
Trapdoor trapdoor_from_json(const nlohmann::json& doc);

// 1 version octet, 10-octet recipient digest, body.
std::vector<std::uint8_t> encode_ciphertext(const Ciphertext& ct);
Ciphertext decode_ciphertext(const std::vector<std::uint8_t>& bytes);

nlohmann::json read_json_file(const std::filesystem::path& path);

// owner_only leaves the file readable by its owner alone (0400).
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc,
                     bool owner_only = false);

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& bytes);

}  // namespace fastgen

#endif  // FASTGEN_FILES_HPP_
