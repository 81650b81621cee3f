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

#include "fastgen/files.hpp"

#include <fstream>
#include <iterator>

#include "fastgen/celebrity.hpp"
#include "fastgen/error.hpp"
#include "fastgen/hash.hpp"
#include "fastgen/malicious.hpp"

namespace fastgen {
namespace {

using nlohmann::json;

BigInt hex_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_string()) {
    throw Error(ErrorCode::kFormat, std::string("missing string field \"") + key + "\"");
  }
  return from_hex(doc.at(key).get<std::string>());
}

}  // namespace

json params_to_json(const GroupParams& params) {
  return json{{"q", to_hex(params.q)},
              {"p", to_hex(params.p)},
              {"f", to_hex(params.f)},
              {"cofactor", to_hex(params.cofactor)}};
}

GroupParams params_from_json(const json& doc) {
  GroupParams params =
      make_params(hex_field(doc, "q"), hex_field(doc, "p"), hex_field(doc, "f"));
  if (hex_field(doc, "cofactor") != params.cofactor) {
    throw Error(ErrorCode::kFormat, "cofactor does not equal (q-1)/p");
  }
  return params;
}

std::string params_id(const GroupParams& params) {
  const Sha256Digest digest = sha256(params_to_json(params).dump());
  return hex_bytes(digest);
}

json transcript_to_json(const Transcript& t) {
  return json{{"params_id", t.params_id},
              {"g", t.generator.hex()},
              {"msg_a", t.msg_a.hex()},
              {"msg_b", t.msg_b.hex()}};
}

Transcript transcript_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("params_id") || !doc.at("params_id").is_string()) {
    throw Error(ErrorCode::kFormat, "missing string field \"params_id\"");
  }
  return Transcript{doc.at("params_id").get<std::string>(), Element(hex_field(doc, "g")),
                    Element(hex_field(doc, "msg_a")), Element(hex_field(doc, "msg_b"))};
}

json key_to_json(const KeyPair& key) {
  return json{{"secret", key.secret.hex()}, {"public", key.public_key.hex()}};
}

KeyPair key_from_json(const json& doc) {
  return KeyPair{Exponent(hex_field(doc, "secret")), Element(hex_field(doc, "public"))};
}

json public_key_to_json(const Element& public_key) {
  return json{{"public", public_key.hex()}};
}

Element public_key_from_json(const json& doc) { return Element(hex_field(doc, "public")); }

json standard_to_json(const PublishedStandard& standard) {
  return json{{"q", to_hex(standard.params.q)},
              {"p", to_hex(standard.params.p)},
              {"g", standard.g.hex()}};
}

PublishedStandard standard_from_json(const json& doc) {
  const BigInt g = hex_field(doc, "g");
  return PublishedStandard{make_params(hex_field(doc, "q"), hex_field(doc, "p"), g),
                           Element(g)};
}

json trapdoor_to_json(const Trapdoor& trapdoor) {
  return json{{"t", trapdoor.t.hex()}, {"f", trapdoor.f.hex()}};
}

Trapdoor trapdoor_from_json(const json& doc) {
  return Trapdoor{Exponent(hex_field(doc, "t")), Element(hex_field(doc, "f"))};
}

std::vector<std::uint8_t> encode_ciphertext(const Ciphertext& ct) {
  std::vector<std::uint8_t> out;
  out.reserve(1 + ct.recipient.size() + ct.body.size());
  out.push_back(ct.version);
  out.insert(out.end(), ct.recipient.begin(), ct.recipient.end());
  out.insert(out.end(), ct.body.begin(), ct.body.end());
  return out;
}

Ciphertext decode_ciphertext(const std::vector<std::uint8_t>& bytes) {
  constexpr std::size_t kHeader = 1 + kRecipientDigestBytes;
  if (bytes.size() < kHeader) throw Error(ErrorCode::kFormat, "ciphertext shorter than its header");
  Ciphertext ct;
  ct.version = bytes[0];
  if (ct.version != kCiphertextVersion) {
    throw Error(ErrorCode::kFormat, "unsupported ciphertext version " + std::to_string(ct.version));
  }
  std::copy_n(bytes.begin() + 1, kRecipientDigestBytes, ct.recipient.begin());
  ct.body.assign(bytes.begin() + kHeader, bytes.end());
  return ct;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormat, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc, bool owner_only) {
  namespace fs = std::filesystem;
  // A previous owner-read-only file cannot be reopened for writing.
  std::error_code ignored;
  fs::remove(path, ignored);
  {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kFormat, "cannot write " + path.string());
    out << doc.dump() << '\n';
  }
  if (owner_only) fs::permissions(path, fs::perms::owner_read, fs::perm_options::replace);
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFormat, "cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_binary_file(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kFormat, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace fastgen
