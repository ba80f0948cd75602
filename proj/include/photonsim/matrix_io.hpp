// Copyright 2026 The photonsim Authors
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

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "photonsim/matrix.hpp"

namespace photonsim {

// "re+imj" with 17 significant digits, e.g. "0.5-0.25j".
std::string format_complex(std::complex<double> z);
// Accepts "a+bj", "a-bj", "a", "bj" ("i" is accepted in place of "j").
std::complex<double> parse_complex(std::string_view text);

// Text format: one matrix row per line, entries separated by whitespace or
// commas; blank lines and lines starting with '#' are skipped.
ComplexMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const ComplexMatrix& m);

// Binary format: little-endian uint64 rows, uint64 cols, then row-major
// (re, im) double pairs.
ComplexMatrix read_matrix_binary(std::istream& in);
void write_matrix_binary(std::ostream& out, const ComplexMatrix& m);

// Chooses the binary format for paths ending in ".bin".
ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace photonsim
