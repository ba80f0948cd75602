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

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "photonsim/error.hpp"
#include "photonsim/matrix.hpp"
#include "photonsim/matrix_io.hpp"
#include "photonsim/random.hpp"

using namespace photonsim;
using Complex = std::complex<double>;

TEST_CASE("complex numbers format and parse losslessly") {
  for (Complex z : {Complex(0.1, -0.2), Complex(1.0 / 3, 2.0 / 7), Complex(-1e-300, 5e200),
                    Complex(0, -0.0), Complex(-7, 0)}) {
    const Complex back = parse_complex(format_complex(z));
    CHECK(back.real() == z.real());
    CHECK(back.imag() == z.imag());
  }
  CHECK(parse_complex("3") == Complex(3, 0));
  CHECK(parse_complex("2.5j") == Complex(0, 2.5));
  CHECK(parse_complex("1-2j") == Complex(1, -2));
  CHECK(parse_complex("1e-3+4e2i") == Complex(1e-3, 4e2));
  for (const char* bad : {"", "j", "1+", "1+2", "abc", "1+2jx", "nan+0j"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad), ParseError);
  }
}

TEST_CASE("text matrices round trip") {
  Rng rng = split_stream(1, 0);
  const ComplexMatrix u = haar_unitary(5, rng).matrix();
  std::stringstream buffer;
  write_matrix_text(buffer, u);
  CHECK(read_matrix_text(buffer) == u);
}

TEST_CASE("text matrices skip comments and report ragged rows") {
  std::istringstream ok("# header\n1 0j\n\n0 1\n");
  CHECK(read_matrix_text(ok) == ComplexMatrix::Identity(2, 2));

  std::istringstream ragged("1 0\n0\n");
  try {
    read_matrix_text(ragged);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream garbage("1 0\n0 x\n");
  try {
    read_matrix_text(garbage);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_matrix_text(empty), ParseError);
}

TEST_CASE("binary matrices round trip and reject truncation") {
  Rng rng = split_stream(2, 0);
  const ComplexMatrix u = haar_unitary(4, rng).matrix();
  std::stringstream buffer;
  write_matrix_binary(buffer, u);
  const std::string bytes = buffer.str();
  CHECK(bytes.size() == 16 + 16 * 16);
  std::istringstream in(bytes);
  CHECK(read_matrix_binary(in) == u);
  std::istringstream cut(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(read_matrix_binary(cut), ParseError);
}

TEST_CASE("load and save pick the format from the extension") {
  const auto dir = std::filesystem::temp_directory_path() / "photonsim_matrix_test";
  std::filesystem::create_directories(dir);
  Rng rng = split_stream(3, 0);
  const ComplexMatrix u = haar_unitary(3, rng).matrix();
  for (const char* name : {"u.txt", "u.bin"}) {
    const std::string path = (dir / name).string();
    save_matrix(path, u);
    CHECK(load_matrix(path) == u);
  }
  CHECK_THROWS(load_matrix((dir / "missing.txt").string()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("embed places a block on the diagonal") {
  ComplexMatrix block(2, 2);
  block << 0, 1, 1, 0;
  const ComplexMatrix e = embed(block, 1, 4);
  CHECK(e(0, 0) == Complex(1));
  CHECK(e(1, 2) == Complex(1));
  CHECK(e(2, 1) == Complex(1));
  CHECK(e(1, 1) == Complex(0));
  CHECK(e(3, 3) == Complex(1));
  CHECK_THROWS_AS(embed(block, 3, 4), InvalidArgument);
}
