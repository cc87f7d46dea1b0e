#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chefshat/common.hpp"

namespace chefshat {

// Face value 12 is reserved for the joker; ingredient cards are 1..11.
inline constexpr int kJokerValue = 12;
inline constexpr int kMaxCardValue = 12;
inline constexpr int kValueDivisor = 13;  // observation normalizer, 0 = empty slot

struct Card {
  int value = 0;       // 1..11 ingredient, 12 joker
  bool golden = false; // the single marked 11 whose holder leads the shift
};

enum class Role { Chef, SousChef, Waiter, Dishwasher, None };

std::string role_name(Role r);

// Per-value multiset of cards; index by face value, slot 0 unused.
using HandCounts = std::array<int, kMaxCardValue + 1>;

inline int hand_size(const HandCounts& h) {
  int n = 0;
  for (int v = 1; v <= kMaxCardValue; ++v) n += h[v];
  return n;
}

struct DeckConfig {
  int max_value = 11;
  std::map<int, int> copies_of;  // empty -> default of v copies of value v
  int joker_count = 2;
  bool use_joker = true;
  bool use_card_exchange = true;
  bool use_special_actions = true;
  bool exchange_literal = false;  // Dishwasher surrenders highest faces instead
  int target_score = 15;
  int board_slots = 11;
  int player_count = 4;

  int copies(int value) const;
  int ingredient_count() const;
  int deck_size() const;          // ingredients + jokers when enabled
  int cards_per_player() const;   // floor(deck_size / player_count)
  int observation_size() const { return cards_per_player() + board_slots; }

  void validate() const;  // throws ConfigError
  uint64_t hash() const;  // stable across runs, pins rule set in logs

  // Experiment 1 variants: "all", "no-joker", "no-exchange", "no-special".
  static DeckConfig variant(std::string_view name);
};

// Builds the unshuffled deck: copies_of(v) cards per value, one golden 11,
// then jokers.
std::vector<Card> build_deck(const DeckConfig& config);

}  // namespace chefshat
