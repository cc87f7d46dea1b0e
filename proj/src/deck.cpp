#include "chefshat/deck.hpp"

#include <numeric>

namespace chefshat {

std::string role_name(Role r) {
  switch (r) {
    case Role::Chef: return "Chef";
    case Role::SousChef: return "SousChef";
    case Role::Waiter: return "Waiter";
    case Role::Dishwasher: return "Dishwasher";
    case Role::None: return "None";
  }
  return "None";
}

int DeckConfig::copies(int value) const {
  if (value < 1 || value > max_value) return 0;
  if (copies_of.empty()) return value;
  auto it = copies_of.find(value);
  return it == copies_of.end() ? 0 : it->second;
}

int DeckConfig::ingredient_count() const {
  int total = 0;
  for (int v = 1; v <= max_value; ++v) total += copies(v);
  return total;
}

int DeckConfig::deck_size() const {
  return ingredient_count() + (use_joker ? joker_count : 0);
}

int DeckConfig::cards_per_player() const {
  return deck_size() / player_count;
}

void DeckConfig::validate() const {
  if (max_value < 1 || max_value > 11)
    throw ConfigError("max_value must be in 1..11");
  if (!copies_of.empty()) {
    bool any = false;
    for (const auto& [v, n] : copies_of) {
      if (v < 1 || v > max_value)
        throw ConfigError("copies_of value out of range 1..max_value");
      if (n < 0) throw ConfigError("copies_of count must be >= 0");
      any = any || n > 0;
    }
    if (!any) throw ConfigError("copies_of has no cards");
  }
  if (ingredient_count() <= 0) throw ConfigError("deck has no ingredient cards");
  if (joker_count < 0 || joker_count > 2)
    throw ConfigError("joker_count must be 0..2 (action table layout)");
  if (use_joker && joker_count == 0)
    throw ConfigError("use_joker requires joker_count > 0");
  if (target_score < 1) throw ConfigError("target_score must be >= 1");
  if (board_slots < 1) throw ConfigError("board_slots must be >= 1");
  if (player_count < 3 || player_count > 6)
    throw ConfigError("player_count must be 3..6");
  if (cards_per_player() < 1)
    throw ConfigError("deck too small for the player count");
}

uint64_t DeckConfig::hash() const {
  // FNV-1a over a canonical field serialization.
  uint64_t h = 0xcbf29ce484222325ULL;
  auto put = [&h](uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  put(static_cast<uint64_t>(max_value));
  for (int v = 1; v <= max_value; ++v) put(static_cast<uint64_t>(copies(v)));
  put(static_cast<uint64_t>(joker_count));
  put(use_joker ? 1 : 0);
  put(use_card_exchange ? 1 : 0);
  put(use_special_actions ? 1 : 0);
  put(exchange_literal ? 1 : 0);
  put(static_cast<uint64_t>(target_score));
  put(static_cast<uint64_t>(board_slots));
  put(static_cast<uint64_t>(player_count));
  return h;
}

DeckConfig DeckConfig::variant(std::string_view name) {
  DeckConfig c;
  if (name == "all") return c;
  if (name == "no-joker") {
    c.use_joker = false;
    return c;
  }
  if (name == "no-exchange") {
    c.use_card_exchange = false;
    return c;
  }
  if (name == "no-special") {
    c.use_special_actions = false;
    return c;
  }
  throw ConfigError("unknown variant: " + std::string(name));
}

std::vector<Card> build_deck(const DeckConfig& config) {
  std::vector<Card> deck;
  deck.reserve(static_cast<size_t>(config.deck_size()));
  bool golden_placed = false;
  for (int v = 1; v <= config.max_value; ++v) {
    for (int i = 0; i < config.copies(v); ++i) {
      bool golden = v == 11 && !golden_placed;
      golden_placed = golden_placed || golden;
      deck.push_back(Card{v, golden});
    }
  }
  if (config.use_joker) {
    for (int i = 0; i < config.joker_count; ++i)
      deck.push_back(Card{kJokerValue, false});
  }
  return deck;
}

}  // namespace chefshat
