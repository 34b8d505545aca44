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

#ifndef PDC_RATIONAL_HPP
#define PDC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace pdc {

// Exact rational arithmetic. mpq_class keeps every value canonical (lowest
// terms, positive denominator); there is no rounding anywhere in this
// project.
using Rational = mpq_class;
using Integer = mpz_class;

// Serialized form is always "num/den", including integral values ("3/1").
std::string rational_to_string(const Rational& q);

// Accepts "num/den" or a bare integer string "num".
Rational rational_from_string(const std::string& s);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace pdc

#endif  // PDC_RATIONAL_HPP
