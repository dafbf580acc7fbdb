// Copyright 2026 The GSV Authors
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

#pragma once

// Exact classic and grouped Shapley values for small cooperative games given
// by an explicit value function. Everything here enumerates subsets, so the
// player count is capped at kMaxPlayers.
//
// Scalar is the value type of the game: double for general games, Rational
// when the value function returns ratios of small integers and the result is
// needed exactly.

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gsv/error.hpp"
#include "gsv/rational.hpp"

namespace gsv {

/// Set of players encoded as a bitmask; bit i is player i (0-based).
using Coalition = std::uint32_t;

inline constexpr int kMaxPlayers = 24;

template <typename Scalar>
class CooperativeGame {
 public:
  using ValueFunction = std::function<Scalar(Coalition)>;

  CooperativeGame(int player_count, ValueFunction value)
      : player_count_(player_count), value_(std::move(value)) {
    if (player_count_ < 1 || player_count_ > kMaxPlayers) {
      throw ArgumentError("CooperativeGame: player count must be in [1, " +
                          std::to_string(kMaxPlayers) + "], got " +
                          std::to_string(player_count_));
    }
    if (!value_) throw ArgumentError("CooperativeGame: empty value function");
  }

  int player_count() const { return player_count_; }
  Coalition grand_coalition() const { return (Coalition{1} << player_count_) - 1; }
  Scalar value(Coalition coalition) const { return value_(coalition); }

 private:
  int player_count_;
  ValueFunction value_;
};

/// Exact partition of a game's players into predefined coalitions.
class PlayerPartition {
 public:
  PlayerPartition(int player_count, std::vector<Coalition> groups)
      : player_count_(player_count), groups_(std::move(groups)) {
    if (player_count_ < 1 || player_count_ > kMaxPlayers) {
      throw ArgumentError("PlayerPartition: bad player count");
    }
    const Coalition all = (Coalition{1} << player_count_) - 1;
    Coalition seen = 0;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      const Coalition g = groups_[i];
      if (g == 0) throw ValidationError("PlayerPartition: group " + std::to_string(i) + " is empty");
      if ((g & ~all) != 0) {
        throw ValidationError("PlayerPartition: group " + std::to_string(i) +
                              " references a player outside the game");
      }
      if ((g & seen) != 0) {
        throw ValidationError("PlayerPartition: group " + std::to_string(i) +
                              " overlaps an earlier group");
      }
      seen |= g;
    }
    if (seen != all) throw ValidationError("PlayerPartition: groups do not cover every player");
  }

  static PlayerPartition singletons(int player_count) {
    std::vector<Coalition> groups;
    for (int i = 0; i < player_count; ++i) groups.push_back(Coalition{1} << i);
    return PlayerPartition(player_count, std::move(groups));
  }

  int player_count() const { return player_count_; }
  int size() const { return static_cast<int>(groups_.size()); }
  Coalition group(int index) const { return groups_.at(static_cast<std::size_t>(index)); }
  const std::vector<Coalition>& groups() const { return groups_; }

 private:
  int player_count_;
  std::vector<Coalition> groups_;
};

namespace detail {

using Int128 = Rational::Int;

inline Int128 factorial(int n) {
  Int128 r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// coefficients[s] = s! (n - s - 1)!; the Shapley weight is coefficients[s] / n!.
inline std::vector<Int128> shapley_coefficients(int n) {
  std::vector<Int128> c(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) c[static_cast<std::size_t>(s)] = factorial(s) * factorial(n - s - 1);
  return c;
}

template <typename Scalar>
Scalar from_int(Int128 v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(v);
  } else {
    return static_cast<Scalar>(v);
  }
}

// Shapley value of "player" in a game over n players whose worth table is
// indexed by player bitmask.
template <typename Scalar>
Scalar shapley_from_table(const std::vector<Scalar>& worth, int n, int player) {
  const auto coeff = shapley_coefficients(n);
  const Coalition bit = Coalition{1} << player;
  const Coalition count = Coalition{1} << n;
  Scalar total{};
  for (Coalition s = 0; s < count; ++s) {
    if ((s & bit) != 0) continue;
    const Scalar delta = worth[s | bit] - worth[s];
    total += from_int<Scalar>(coeff[static_cast<std::size_t>(std::popcount(s))]) * delta;
  }
  return total / from_int<Scalar>(factorial(n));
}

// v(union of the groups in mask) for every group mask.
template <typename Scalar>
std::vector<Scalar> group_worth_table(const CooperativeGame<Scalar>& game,
                                      const PlayerPartition& partition) {
  const int k = partition.size();
  std::vector<Scalar> worth(std::size_t{1} << k);
  for (Coalition mask = 0; mask < (Coalition{1} << k); ++mask) {
    Coalition players = 0;
    for (int g = 0; g < k; ++g) {
      if ((mask >> g) & 1U) players |= partition.group(g);
    }
    worth[mask] = game.value(players);
  }
  return worth;
}

template <typename Scalar>
void check_partition(const CooperativeGame<Scalar>& game, const PlayerPartition& partition,
                     int group) {
  if (partition.player_count() != game.player_count()) {
    throw ValidationError("partition player count does not match the game");
  }
  if (group < 0 || group >= partition.size()) {
    throw ArgumentError("group index " + std::to_string(group) + " out of range");
  }
}

}  // namespace detail

/// Classic Shapley value of one player (0-based):
///   sum over S not containing i of |S|!(p-|S|-1)!/p! * (v(S+i) - v(S)).
template <typename Scalar>
Scalar classic_shapley(const CooperativeGame<Scalar>& game, int player) {
  const int p = game.player_count();
  if (player < 0 || player >= p) {
    throw ArgumentError("player index " + std::to_string(player) + " out of range");
  }
  const auto coeff = detail::shapley_coefficients(p);
  const Coalition bit = Coalition{1} << player;
  Scalar total{};
  for (Coalition s = 0; s < (Coalition{1} << p); ++s) {
    if ((s & bit) != 0) continue;
    const Scalar delta = game.value(s | bit) - game.value(s);
    total += detail::from_int<Scalar>(coeff[static_cast<std::size_t>(std::popcount(s))]) * delta;
  }
  return total / detail::from_int<Scalar>(detail::factorial(p));
}

/// Grouped Shapley value of one predefined coalition: the classic formula
/// played over the k groups, each group entering or leaving as a unit.
template <typename Scalar>
Scalar grouped_shapley(const CooperativeGame<Scalar>& game, const PlayerPartition& partition,
                       int group) {
  detail::check_partition(game, partition, group);
  const auto worth = detail::group_worth_table(game, partition);
  return detail::shapley_from_table(worth, partition.size(), group);
}

/// All grouped Shapley values at once, sharing a single worth table.
template <typename Scalar>
std::vector<Scalar> grouped_shapley_values(const CooperativeGame<Scalar>& game,
                                           const PlayerPartition& partition) {
  detail::check_partition(game, partition, 0);
  const auto worth = detail::group_worth_table(game, partition);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(partition.size()));
  for (int g = 0; g < partition.size(); ++g) {
    out.push_back(detail::shapley_from_table(worth, partition.size(), g));
  }
  return out;
}

/// Sum of the classic Shapley values of the players in a group. This is the
/// common post-hoc aggregation and, in general, differs from grouped_shapley.
template <typename Scalar>
Scalar naive_group_sum(const CooperativeGame<Scalar>& game, const PlayerPartition& partition,
                       int group) {
  detail::check_partition(game, partition, group);
  const Coalition members = partition.group(group);
  Scalar total{};
  for (int i = 0; i < game.player_count(); ++i) {
    if ((members >> i) & 1U) total += classic_shapley(game, i);
  }
  return total;
}

/// Glove game: players [0, left_gloves) hold a left glove, the last player
/// holds the only right glove. A coalition is worth 1 iff it can form a pair.
template <typename Scalar = Rational>
CooperativeGame<Scalar> glove_game(int left_gloves = 2) {
  if (left_gloves < 1 || left_gloves + 1 > kMaxPlayers) {
    throw ArgumentError("glove_game: left glove count out of range");
  }
  const Coalition left = (Coalition{1} << left_gloves) - 1;
  const Coalition right = Coalition{1} << left_gloves;
  return CooperativeGame<Scalar>(left_gloves + 1, [left, right](Coalition s) {
    return ((s & right) != 0 && (s & left) != 0) ? Scalar(1) : Scalar(0);
  });
}

}  // namespace gsv
