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

#include "photonsim/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "photonsim/error.hpp"

namespace photonsim {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

template <typename T>
T to_little_endian(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  v = to_little_endian(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_le(std::istream& in) {
  T v;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    throw ParseError("truncated binary matrix");
  }
  return to_little_endian(v);
}

}  // namespace

std::string format_complex(std::complex<double> z) {
  const double im = z.imag();
  std::string out = format_double(z.real());
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::abs(im));
  out += 'j';
  return out;
}

std::complex<double> parse_complex(std::string_view text) {
  const std::string s(text);
  const auto bad = [&] { return ParseError("bad complex number '" + s + "'"); };
  if (s.empty()) throw bad();
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double first = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) throw bad();
  if (*end == '\0') return {first, 0.0};
  if ((*end == 'j' || *end == 'i') && end[1] == '\0') return {0.0, first};
  if (*end != '+' && *end != '-') throw bad();
  const char* second_begin = end;
  const double second = std::strtod(second_begin, &end);
  if (end == second_begin || errno == ERANGE) throw bad();
  if ((*end != 'j' && *end != 'i') || end[1] != '\0') throw bad();
  if (!std::isfinite(first) || !std::isfinite(second)) throw bad();
  return {first, second};
}

ComplexMatrix read_matrix_text(std::istream& in) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::vector<std::complex<double>> row;
    while (pos < line.size()) {
      const std::size_t stop = line.find_first_of(" \t\r,", pos);
      const std::size_t len = (stop == std::string::npos ? line.size() : stop) - pos;
      if (len > 0) {
        try {
          row.push_back(parse_complex(std::string_view(line).substr(pos, len)));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_no, static_cast<int>(pos) + 1);
        }
      }
      if (stop == std::string::npos) break;
      pos = stop + 1;
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file");
  ComplexMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void write_matrix_text(std::ostream& out, const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix_binary(std::istream& in) {
  const auto rows = read_le<std::uint64_t>(in);
  const auto cols = read_le<std::uint64_t>(in);
  if (rows > (1u << 16) || cols > (1u << 16)) throw ParseError("binary matrix dimensions too large");
  ComplexMatrix m(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      const double re = read_le<double>(in);
      const double im = read_le<double>(in);
      m(r, c) = {re, im};
    }
  }
  if (!m.allFinite()) throw NumericError("binary matrix has non-finite entries");
  return m;
}

void write_matrix_binary(std::ostream& out, const ComplexMatrix& m) {
  write_le<std::uint64_t>(out, m.rows());
  write_le<std::uint64_t>(out, m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      write_le(out, m(r, c).real());
      write_le(out, m(r, c).imag());
    }
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  const bool binary = ends_with(path, ".bin");
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return binary ? read_matrix_binary(in) : read_matrix_text(in);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  const bool binary = ends_with(path, ".bin");
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  if (binary) {
    write_matrix_binary(out, m);
  } else {
    write_matrix_text(out, m);
  }
}

}  // namespace photonsim
