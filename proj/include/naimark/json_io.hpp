// Copyright 2026 The Naimark Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAIMARK_JSON_IO_HPP
#define NAIMARK_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "naimark/extension.hpp"
#include "naimark/povm.hpp"
#include "naimark/verify.hpp"

// JSON wire formats. Complex entries are [re, im] pairs, matrices row-major
// nested arrays, doubles serialized at full round-trip precision. Field
// order is fixed (ordered_json) so identical inputs produce identical bytes.

namespace naimark {

using json = nlohmann::ordered_json;

json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

json povm_to_json(const Povm &povm);
Povm povm_from_json(const json &j);

json extension_to_json(const NaimarkExtension &ext);
NaimarkExtension extension_from_json(const json &j);

json report_to_json(const VerificationReport &report);

/// Parse with line/column diagnostics folded into the thrown Error.
json parse_json_text(const std::string &text, const std::string &origin);

json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const json &j);

}  // namespace naimark

#endif
