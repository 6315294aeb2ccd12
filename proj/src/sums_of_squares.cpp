#include "madelung/sums_of_squares.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "madelung/errors.hpp"

namespace madelung {

namespace {

std::size_t isqrt(std::size_t m) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

void require_dimension(int dimension, int minimum) {
  if (dimension < minimum) {
    throw std::invalid_argument("dimension must be >= " + std::to_string(minimum));
  }
}

}  // namespace

RepTable RepTable::squares(int max_dimension, std::size_t max_m) {
  require_dimension(max_dimension, 0);
  RepTable table(Parity::any, max_m);
  table.rows_.reserve(static_cast<std::size_t>(max_dimension) + 1);

  std::vector<BigInt> row(max_m + 1);
  row[0] = 1;
  table.rows_.push_back(row);
  for (int n = 1; n <= max_dimension; ++n) {
    const auto& prev = table.rows_.back();
    std::vector<BigInt> next(max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m) {
      BigInt acc = 0;
      for (std::size_t i = 1; i * i <= m; ++i) acc += prev[m - i * i];
      next[m] = prev[m] + 2 * acc;
    }
    table.rows_.push_back(std::move(next));
  }
  return table;
}

RepTable RepTable::odd_squares(int max_dimension, std::size_t max_m) {
  require_dimension(max_dimension, 1);
  RepTable table(Parity::odd, max_m);
  table.rows_.reserve(static_cast<std::size_t>(max_dimension) + 1);
  // Row 0 is a placeholder so that rows_ is indexed by dimension.
  table.rows_.emplace_back(max_m + 1);

  std::vector<BigInt> first(max_m + 1);
  for (std::size_t j = 1; j * j <= max_m; j += 2) first[j * j] = 2;
  table.rows_.push_back(std::move(first));

  for (int n = 2; n <= max_dimension; ++n) {
    const auto& prev = table.rows_.back();
    std::vector<BigInt> next(max_m + 1);
    // Odd squares are 1 mod 8, so r_n^odd(m) vanishes unless m = n mod 8.
    for (std::size_t m = static_cast<std::size_t>(n % 8); m <= max_m; m += 8) {
      BigInt acc = 0;
      for (std::size_t j = 1; j * j < m; j += 2) acc += prev[m - j * j];
      next[m] = 2 * acc;
    }
    table.rows_.push_back(std::move(next));
  }
  return table;
}

const BigInt& RepTable::at(int dimension, std::size_t m) const {
  const int lowest = parity_ == Parity::odd ? 1 : 0;
  if (dimension < lowest || dimension > max_dimension() || m > max_m_) {
    throw BoundsError("RepTable: (" + std::to_string(dimension) + ", " + std::to_string(m) +
                      ") outside table");
  }
  return rows_[static_cast<std::size_t>(dimension)][m];
}

std::span<const BigInt> RepTable::row(int dimension) const {
  const int lowest = parity_ == Parity::odd ? 1 : 0;
  if (dimension < lowest || dimension > max_dimension()) {
    throw BoundsError("RepTable: dimension " + std::to_string(dimension) + " outside table");
  }
  return rows_[static_cast<std::size_t>(dimension)];
}

BigInt r_squares(int dimension, std::size_t m) {
  require_dimension(dimension, 0);
  return RepTable::squares(dimension, m).at(dimension, m);
}

BigInt r_odd_squares(int dimension, std::size_t m) {
  require_dimension(dimension, 1);
  return RepTable::odd_squares(dimension, m).at(dimension, m);
}

BigInt r_even_squares(int dimension, std::size_t m) {
  require_dimension(dimension, 1);
  if (m % 4 != 0) return 0;
  return r_squares(dimension, m / 4);
}

std::vector<BigInt> brute_force_counts(int dimension, std::size_t max_m, Parity parity) {
  require_dimension(dimension, 1);
  if (dimension > 8 || max_m > 400) {
    throw BoundsError("brute_force_counts: requires dimension <= 8 and m <= 400");
  }
  // Lattice points within radius sqrt(max_m) fit in the ball of radius
  // sqrt(max_m) + sqrt(N)/2; its volume bounds the number of visited tuples.
  const double n = dimension;
  const double radius = std::sqrt(static_cast<double>(max_m)) + 0.5 * std::sqrt(n);
  const double volume = std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0) *
                        std::pow(radius, n);
  if (volume > 1e9) throw BoundsError("brute_force_counts: enumeration budget exceeded");

  std::vector<std::uint64_t> counts(max_m + 1, 0);
  const auto bound = static_cast<long>(isqrt(max_m));
  const long step = parity == Parity::odd ? 2 : 1;
  const long start = parity == Parity::odd ? -(bound % 2 == 1 ? bound : bound - 1) : -bound;

  std::function<void(int, std::size_t)> visit = [&](int depth, std::size_t partial) {
    if (depth == dimension) {
      ++counts[partial];
      return;
    }
    for (long i = start; i <= bound; i += step) {
      const auto sq = static_cast<std::size_t>(i * i);
      if (partial + sq <= max_m) visit(depth + 1, partial + sq);
    }
  };
  if (start <= bound) visit(0, 0);

  return {counts.begin(), counts.end()};
}

BigInt brute_force_r(int dimension, std::size_t m, Parity parity) {
  return brute_force_counts(dimension, m, parity)[m];
}

}  // namespace madelung
