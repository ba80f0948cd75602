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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <thread>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "photonsim/error.hpp"

namespace photonsim {

// Integer matrices accumulate in 128 bits so that small integer permanents
// (e.g. of all-ones matrices) come out exact.
template <typename Scalar>
struct PermanentTraits {
  using Accumulator = Scalar;
};
template <>
struct PermanentTraits<int> {
  using Accumulator = __int128;
};
template <>
struct PermanentTraits<long long> {
  using Accumulator = __int128;
};

template <typename Derived>
using PermanentOf = typename PermanentTraits<typename Derived::Scalar>::Accumulator;

struct PermanentConfig {
  unsigned threads = 1;
  int ryser_min_size = 12;
  unsigned ryser_min_threads = 4;
};

namespace detail {

// The Gray-code range is always cut into this many chunks, whatever the thread
// count, and partial sums are added in chunk order. Results are therefore
// bit-identical across thread counts.
inline constexpr std::uint64_t kPermanentChunks = 64;
inline constexpr int kMaxPermanentSize = 48;

template <typename T>
inline T mul(const T& a, const T& b) {
  return a * b;
}

template <typename T>
inline std::complex<T> mul(const std::complex<T>& a, const std::complex<T>& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <typename T>
T scale_pow2(const T& x, int e) {
  if constexpr (std::is_integral_v<T> || std::is_same_v<T, __int128>) {
    return x / (static_cast<T>(1) << e);
  } else {
    return x * std::ldexp(1.0, -e);
  }
}

inline void require_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) {
    throw InvalidArgument("permanent of a non-square " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix");
  }
  if (rows > kMaxPermanentSize) throw CapacityError("permanent size too large");
}

inline std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

template <typename Acc, typename ChunkFn>
Acc sum_chunks(std::uint64_t total, unsigned threads, const ChunkFn& chunk) {
  const std::uint64_t chunks = std::min(kPermanentChunks, total);
  std::vector<Acc> partial(chunks, Acc(0));
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      const auto begin = static_cast<std::uint64_t>((unsigned __int128)total * c / chunks);
      const auto end = static_cast<std::uint64_t>((unsigned __int128)total * (c + 1) / chunks);
      partial[c] = chunk(begin, end);
    }
  };
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, chunks);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
    work(0, workers);
  }
  Acc sum(0);
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace detail

// Reference O(n * n!) expansion over all permutations.
template <typename Derived>
PermanentOf<Derived> permanent_naive(const Eigen::MatrixBase<Derived>& a) {
  using Acc = PermanentOf<Derived>;
  detail::require_square(a.rows(), a.cols());
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Acc total(0);
  do {
    Acc term(1);
    for (int i = 0; i < n; ++i) term = detail::mul(term, static_cast<Acc>(a(i, p[i])));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Ryser's inclusion-exclusion formula over column subsets in Gray-code order.
template <typename Derived>
PermanentOf<Derived> permanent_ryser(const Eigen::MatrixBase<Derived>& a, unsigned threads = 1) {
  using Scalar = typename Derived::Scalar;
  using Acc = PermanentOf<Derived>;
  detail::require_square(a.rows(), a.cols());
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Acc(1);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a;
  const std::uint64_t total = std::uint64_t{1} << n;

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Scalar> sums(n, Scalar(0));
    std::uint64_t g = detail::gray(begin);
    for (int j = 0; j < n; ++j) {
      if (g >> j & 1) {
        for (int i = 0; i < n; ++i) sums[i] += m(i, j);
      }
    }
    Acc acc(0);
    for (std::uint64_t k = begin;;) {
      Acc prod = static_cast<Acc>(sums[0]);
      for (int i = 1; i < n; ++i) prod = detail::mul(prod, static_cast<Acc>(sums[i]));
      if ((n - std::popcount(g)) & 1) {
        acc -= prod;
      } else {
        acc += prod;
      }
      if (++k == end) break;
      const int j = std::countr_zero(k);
      g ^= std::uint64_t{1} << j;
      const Scalar* col = m.data() + static_cast<std::ptrdiff_t>(j) * n;
      if (g >> j & 1) {
        for (int i = 0; i < n; ++i) sums[i] += col[i];
      } else {
        for (int i = 0; i < n; ++i) sums[i] -= col[i];
      }
    }
    return acc;
  };
  return detail::sum_chunks<Acc>(total, threads, chunk);
}

// Glynn's formula with +-1 row weights (first weight fixed) in Gray-code order.
template <typename Derived>
PermanentOf<Derived> permanent_glynn(const Eigen::MatrixBase<Derived>& a, unsigned threads = 1) {
  using Scalar = typename Derived::Scalar;
  using Acc = PermanentOf<Derived>;
  detail::require_square(a.rows(), a.cols());
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Acc(1);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = a;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Scalar> sums(n);
    std::uint64_t g = detail::gray(begin);
    for (int j = 0; j < n; ++j) {
      Scalar s = m(0, j);
      for (int i = 1; i < n; ++i) {
        if (g >> (i - 1) & 1) {
          s -= m(i, j);
        } else {
          s += m(i, j);
        }
      }
      sums[j] = s;
    }
    Acc acc(0);
    for (std::uint64_t k = begin;;) {
      Acc prod = static_cast<Acc>(sums[0]);
      for (int j = 1; j < n; ++j) prod = detail::mul(prod, static_cast<Acc>(sums[j]));
      if (std::popcount(g) & 1) {
        acc -= prod;
      } else {
        acc += prod;
      }
      if (++k == end) break;
      const int bit = std::countr_zero(k);
      g ^= std::uint64_t{1} << bit;
      const Scalar* row = m.data() + static_cast<std::ptrdiff_t>(bit + 1) * n;
      if (g >> bit & 1) {
        for (int j = 0; j < n; ++j) sums[j] -= Scalar(2) * row[j];
      } else {
        for (int j = 0; j < n; ++j) sums[j] += Scalar(2) * row[j];
      }
    }
    return acc;
  };
  return detail::scale_pow2(detail::sum_chunks<Acc>(total, threads, chunk), n - 1);
}

// Glynn for small matrices or few threads, chunked Ryser otherwise.
template <typename Derived>
PermanentOf<Derived> permanent(const Eigen::MatrixBase<Derived>& a, const PermanentConfig& config = {}) {
  using Acc = PermanentOf<Derived>;
  detail::require_square(a.rows(), a.cols());
  switch (a.rows()) {
    case 0:
      return Acc(1);
    case 1:
      return static_cast<Acc>(a(0, 0));
    case 2:
      return detail::mul(static_cast<Acc>(a(0, 0)), static_cast<Acc>(a(1, 1))) +
             detail::mul(static_cast<Acc>(a(0, 1)), static_cast<Acc>(a(1, 0)));
    default:
      break;
  }
  if (a.rows() >= config.ryser_min_size && config.threads >= config.ryser_min_threads) {
    return permanent_ryser(a, config.threads);
  }
  return permanent_glynn(a, 1);
}

// For an r x (r+1) matrix, the permanents of the r x r matrices obtained by
// deleting column l, for every l, in one Glynn sweep using prefix/suffix products.
template <typename Derived>
std::vector<PermanentOf<Derived>> column_deleted_permanents(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Acc = PermanentOf<Derived>;
  const int r = static_cast<int>(a.rows());
  const int c = static_cast<int>(a.cols());
  if (c != r + 1) throw InvalidArgument("column_deleted_permanents needs an r x (r+1) matrix");
  if (r == 0) return {Acc(1)};
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = a;
  std::vector<Scalar> sums(c);
  for (int j = 0; j < c; ++j) sums[j] = m.col(j).sum();
  std::vector<Acc> prefix(c + 1), suffix(c + 1), out(c, Acc(0));
  const std::uint64_t total = std::uint64_t{1} << (r - 1);
  std::uint64_t g = 0;
  for (std::uint64_t k = 0;;) {
    prefix[0] = Acc(1);
    for (int j = 0; j < c; ++j) prefix[j + 1] = detail::mul(prefix[j], static_cast<Acc>(sums[j]));
    suffix[c] = Acc(1);
    for (int j = c - 1; j >= 0; --j) suffix[j] = detail::mul(suffix[j + 1], static_cast<Acc>(sums[j]));
    const bool negative = std::popcount(g) & 1;
    for (int l = 0; l < c; ++l) {
      const Acc term = detail::mul(prefix[l], suffix[l + 1]);
      if (negative) {
        out[l] -= term;
      } else {
        out[l] += term;
      }
    }
    if (++k == total) break;
    const int bit = std::countr_zero(k);
    g ^= std::uint64_t{1} << bit;
    const Scalar* row = m.data() + static_cast<std::ptrdiff_t>(bit + 1) * c;
    if (g >> bit & 1) {
      for (int j = 0; j < c; ++j) sums[j] -= Scalar(2) * row[j];
    } else {
      for (int j = 0; j < c; ++j) sums[j] += Scalar(2) * row[j];
    }
  }
  for (auto& v : out) v = detail::scale_pow2(v, r - 1);
  return out;
}

}  // namespace photonsim
