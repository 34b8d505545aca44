// Copyright 2026 The pdc Authors.
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

#ifndef PDC_REPORT_HPP
#define PDC_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdc {

// Exit codes: 0 success, 1 input/validation error, 2 broken internal
// invariant. Results go to `out` as one JSON object per run with a fixed
// field order, so identical inputs and flags give byte-identical output;
// timings and notes go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a of the raw bytes, as fixed-width hex; used as the input digest in
// `--report` envelopes.
std::string content_digest(const std::string& bytes);

}  // namespace pdc

#endif  // PDC_REPORT_HPP
