#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chefshat/action_space.hpp"
#include "chefshat/deck.hpp"
#include "chefshat/rewards.hpp"

namespace chefshat {

enum class Phase { Dealing, Exchange, Playing, ShiftEnd, GameEnd };
enum class SpecialAction { FoodFight, DinnerIsServed };

std::string special_action_name(SpecialAction a);

using Observation = std::vector<double>;

struct PlayerState {
  HandCounts hand{};
  bool holds_golden = false;
  bool passed = false;        // sticky until the pizza ends
  int initial_cards = 0;      // hand size at deal
  int wrong_actions = 0;      // rejected proposals, cumulative per game
  Role role = Role::None;
  int score = 0;
};

// The current top play. Jokers assume `value`; a lone joker counts as 12.
struct BoardState {
  int value = 0;
  int cards = 0;
  int jokers = 0;
  bool joker_alone = false;
  bool has_golden = false;

  bool empty() const { return cards == 0 && jokers == 0; }
  int qty() const { return cards + jokers; }
  BoardTop top() const {
    if (empty()) return BoardTop{};
    return joker_alone ? BoardTop{kJokerValue, 1} : BoardTop{value, qty()};
  }
};

struct StepEvents {
  bool cards_played = false;
  bool passed = false;
  bool board_cleaned = false;
  bool player_finished = false;
  int finish_position = -1;
  bool shift_ended = false;
};

struct StepOutcome {
  bool accepted = false;
  double reward = 0.0;
  StepEvents events;
  int next_turn = -1;
};

struct GameState {
  DeckConfig config;
  ActionTable table;
  std::vector<PlayerState> players;

  BoardState board;
  HandCounts discard{};
  bool discard_golden = false;
  HandCounts set_aside{};
  bool set_aside_golden = false;
  HandCounts dealt{};  // per-shift deal snapshot for conservation checks
  bool dealt_golden = false;

  int turn = 0;
  int shift_leader = 0;       // leader of the shift's first pizza
  int last_discarder = -1;
  int shift_index = 1;
  int round_index = 0;        // completed turn cycles, cumulative per game
  uint32_t acted_mask = 0;    // seats that acted since the cycle began
  int pizza_count = 0;        // board cleans, cumulative per game

  std::vector<int> finish_order;       // this shift
  std::vector<int> prev_finish_order;  // previous shift, drives roles

  std::optional<int> special_player;
  std::optional<SpecialAction> special_kind;
  bool special_accepted = false;
  bool exchange_cancelled = false;

  Phase phase = Phase::Dealing;
  int winner = -1;

  uint64_t rng_seed = 0;
  Rng rng;
  std::vector<Card> pending_deck;  // shuffled, consumed by deal()

  int player_count() const { return static_cast<int>(players.size()); }
  int active_count() const;
  bool is_active(int p) const;
  std::vector<int> hand_values(int p) const;  // descending
};

// Chooses which cards a role returns during the exchange. Receives the seat,
// the hand (descending values, post-receive) and how many cards to give back.
using ReturnChooser =
    std::function<std::vector<int>(int seat, const std::vector<int>& hand, int count)>;

std::vector<int> default_return_choice(const std::vector<int>& hand, int count);

struct ExchangeTransfer {
  int from = -1;
  int to = -1;
  std::vector<int> cards;
  bool forced = false;
};

GameState new_game(const DeckConfig& config, uint64_t seed);
void deal(GameState& s);
void assign_roles(GameState& s);

// Both-jokers special action offer, if any. Runs after roles, before the
// card exchange.
std::optional<std::pair<int, SpecialAction>> check_special_action(const GameState& s);
void apply_special_action(GameState& s, int player, SpecialAction kind, bool accepted);

std::vector<ExchangeTransfer> perform_exchange(GameState& s, const ReturnChooser& chooser);
void start_shift_play(GameState& s);

StepOutcome step(GameState& s, int action_id, const RewardSpec& reward);
void score_shift(GameState& s);

Observation observation(const GameState& s, int player);
ActionMask current_legal_mask(const GameState& s);

// Multiset card conservation against the shift's deal. Throws StateError on
// violation; used by tests and property checks.
void check_conservation(const GameState& s);

}  // namespace chefshat
