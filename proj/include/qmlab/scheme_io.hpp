// Copyright 2026 The qmlab Authors
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

// Canonical JSON for field descriptors, leakage schemes and pQM eliminator
// sequences.
//
// Scheme files hold {field: {p, e, irreducible}, k, i, j, servers, schedule,
// sets}; masks are hex strings of sum_i 2^i over member encodings. Output
// uses sorted keys, two-space indentation and a trailing newline, so reading
// and rewriting a canonical file reproduces it byte for byte.

#ifndef QMLAB_SCHEME_IO_HPP_
#define QMLAB_SCHEME_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/qm.hpp"

namespace qmlab {

using Json = nlohmann::json;

// Two-space indentation plus a trailing newline.
std::string canonical_dump(const Json& j);

Json field_to_json(const FieldCtx& ctx);
// `irreducible` may be omitted when e = 1. Errors are Errc::kSchemaError
// naming `where`.
FieldPtr field_from_json(const Json& j, std::string_view where = "field");

Json scheme_to_json(const LeakageScheme& scheme);
// Throws Errc::kSchemaError with the offending field, including schemes that
// fail LeakageScheme::validate.
LeakageScheme scheme_from_json(const Json& j);

std::string write_scheme_string(const LeakageScheme& scheme);
// Parse errors report the line and column.
LeakageScheme read_scheme_string(std::string_view text);
LeakageScheme read_scheme_file(const std::string& path);
void write_scheme_file(const std::string& path, const LeakageScheme& scheme);

// A V-file: {field, V: [hex, ...]}.
struct VSequence {
  FieldPtr ctx;
  std::vector<ElemSet> V;
};
Json vsequence_to_json(const VSequence& seq);
VSequence vsequence_from_json(const Json& j);
VSequence read_vsequence_string(std::string_view text);
VSequence read_vsequence_file(const std::string& path);

// Encodings as integers; sets ascending.
Json elems_to_json(const std::vector<Elem>& xs);
Json set_to_json(const ElemSet& s);
// Bits as a '0'/'1' string; parse_transcript throws Errc::kInvalidArgument
// on other characters.
std::string transcript_string(const Transcript& b);
Transcript parse_transcript(std::string_view bits);
// Reported bounds are the only floats and carry at most 6 decimals.
Json fixed6(double x);

// Parses a document; syntax errors become Errc::kSchemaError.
Json parse_json(std::string_view text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qmlab

#endif  // QMLAB_SCHEME_IO_HPP_
