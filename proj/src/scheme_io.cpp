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

#include "qmlab/scheme_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qmlab/error.hpp"

namespace qmlab {
namespace {

[[noreturn]] void schema_error(std::string_view where, const std::string& msg) {
  throw Error(Errc::kSchemaError, "'" + std::string(where) + "': " + msg);
}

void require_object(const Json& j, std::string_view where,
                    const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const auto& key : required) {
    if (!j.contains(key)) schema_error(where, "missing key '" + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) {
      schema_error(where, "unknown key '" + key + "'");
    }
  }
}

std::uint32_t get_uint(const Json& j, const std::string& where,
                       std::uint64_t max = UINT32_MAX) {
  if (!j.is_number_unsigned()) {
    schema_error(where, "expected a non-negative integer");
  }
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v > max) {
    schema_error(where, std::to_string(v) + " exceeds " + std::to_string(max));
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<Elem> get_elems(const Json& j, const std::string& where,
                            const FieldCtx& ctx) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<Elem> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    out.push_back(Elem{get_uint(j[n], where + "[" + std::to_string(n) + "]",
                                ctx.q() - 1)});
  }
  return out;
}

std::vector<ElemSet> get_masks(const Json& j, const std::string& where,
                               const FieldCtx& ctx) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<ElemSet> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string at = where + "[" + std::to_string(n) + "]";
    if (!j[n].is_string()) schema_error(at, "expected a hex string");
    try {
      out.push_back(ElemSet::from_hex(ctx.q(), j[n].get<std::string>()));
    } catch (const Error& e) {
      schema_error(at, e.what());
    }
  }
  return out;
}

Json masks_to_json(const std::vector<ElemSet>& sets) {
  Json out = Json::array();
  for (const ElemSet& s : sets) out.push_back(s.to_hex());
  return out;
}

}  // namespace

Json elems_to_json(const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(x.value);
  return out;
}

Json set_to_json(const ElemSet& s) { return Json(s.values()); }

std::string transcript_string(const Transcript& b) {
  std::string out;
  for (std::uint8_t bit : b) out.push_back(bit ? '1' : '0');
  return out;
}

Transcript parse_transcript(std::string_view bits) {
  Transcript b;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(Errc::kInvalidArgument,
                  "transcript must be a string of 0 and 1");
    }
    b.push_back(c == '1');
  }
  return b;
}

Json fixed6(double x) { return std::round(x * 1e6) / 1e6; }

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const FieldCtx& ctx) {
  return Json{{"p", ctx.p()}, {"e", ctx.e()}, {"irreducible", ctx.irreducible()}};
}

FieldPtr field_from_json(const Json& j, std::string_view where) {
  const std::string w(where);
  require_object(j, where, {"p", "e"}, {"irreducible"});
  const std::uint32_t p = get_uint(j["p"], w + ".p");
  const std::uint32_t e = get_uint(j["e"], w + ".e");
  if (!is_prime(p)) schema_error(w + ".p", std::to_string(p) + " is not prime");
  if (e < 1) schema_error(w + ".e", "degree must be >= 1");
  std::vector<std::uint32_t> irr;
  if (j.contains("irreducible")) {
    const Json& a = j["irreducible"];
    if (!a.is_array()) schema_error(w + ".irreducible", "expected an array");
    for (std::size_t n = 0; n < a.size(); ++n) {
      irr.push_back(get_uint(a[n], w + ".irreducible[" + std::to_string(n) + "]"));
    }
  } else if (e > 1) {
    schema_error(w + ".irreducible", "required when e > 1");
  } else {
    irr = {0, 1};
  }
  try {
    return FieldCtx::make(p, e, std::move(irr));
  } catch (const Error& err) {
    schema_error(w, err.what());
  }
}

Json scheme_to_json(const LeakageScheme& s) {
  return Json{{"field", field_to_json(*s.ctx)},
              {"k", s.k},
              {"i", s.i},
              {"j", s.j},
              {"servers", elems_to_json(s.servers)},
              {"schedule", elems_to_json(s.schedule)},
              {"sets", masks_to_json(s.sets)}};
}

LeakageScheme scheme_from_json(const Json& j) {
  require_object(j, "scheme",
                 {"field", "k", "i", "j", "servers", "schedule", "sets"});
  LeakageScheme s;
  s.ctx = field_from_json(j["field"]);
  s.k = get_uint(j["k"], "k");
  s.i = get_uint(j["i"], "i");
  s.j = get_uint(j["j"], "j");
  s.servers = get_elems(j["servers"], "servers", *s.ctx);
  s.schedule = get_elems(j["schedule"], "schedule", *s.ctx);
  s.sets = get_masks(j["sets"], "sets", *s.ctx);
  try {
    s.validate();
  } catch (const Error& err) {
    schema_error("scheme", err.what());
  }
  return s;
}

std::string write_scheme_string(const LeakageScheme& scheme) {
  return canonical_dump(scheme_to_json(scheme));
}

LeakageScheme read_scheme_string(std::string_view text) {
  return scheme_from_json(parse_json(text));
}

LeakageScheme read_scheme_file(const std::string& path) {
  return read_scheme_string(read_text_file(path));
}

void write_scheme_file(const std::string& path, const LeakageScheme& scheme) {
  write_text_file(path, write_scheme_string(scheme));
}

Json vsequence_to_json(const VSequence& seq) {
  return Json{{"field", field_to_json(*seq.ctx)}, {"V", masks_to_json(seq.V)}};
}

VSequence vsequence_from_json(const Json& j) {
  require_object(j, "V-file", {"field", "V"});
  VSequence seq;
  seq.ctx = field_from_json(j["field"]);
  seq.V = get_masks(j["V"], "V", *seq.ctx);
  return seq;
}

VSequence read_vsequence_string(std::string_view text) {
  return vsequence_from_json(parse_json(text));
}

VSequence read_vsequence_file(const std::string& path) {
  return read_vsequence_string(read_text_file(path));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::kSchemaError, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error(Errc::kInvalidArgument, "cannot write " + path);
  }
}

}  // namespace qmlab
