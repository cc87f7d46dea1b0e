#include "chefshat/engine.hpp"

#include <algorithm>
#include <cassert>

namespace chefshat {

namespace {

constexpr int kPointsByPosition[4] = {5, 3, 1, 0};

void prepare_deck(GameState& s) {
  s.pending_deck = build_deck(s.config);
  s.rng.shuffle(s.pending_deck);
}

void move_board_to_discard(GameState& s) {
  if (s.board.empty()) return;
  if (s.board.joker_alone) {
    s.discard[kJokerValue] += 1;
  } else {
    s.discard[s.board.value] += s.board.cards;
    s.discard[kJokerValue] += s.board.jokers;
  }
  s.discard_golden = s.discard_golden || s.board.has_golden;
  s.board = BoardState{};
}

// Removes `count` copies of `value`; the golden copy stays in hand while
// plain copies suffice. Returns true when the golden copy moved.
bool remove_from_hand(PlayerState& p, int value, int count) {
  if (p.hand[value] < count)
    throw StateError("removing more cards than held");
  p.hand[value] -= count;
  if (value == 11 && p.holds_golden && p.hand[value] == 0) {
    p.holds_golden = false;
    return true;
  }
  return false;
}

int next_active_from(const GameState& s, int from) {
  int n = s.player_count();
  for (int i = 1; i <= n; ++i) {
    int seat = (from + i) % n;
    if (s.is_active(seat)) return seat;
  }
  throw StateError("no active player remains");
}

int next_active_unpassed_from(const GameState& s, int from) {
  int n = s.player_count();
  for (int i = 1; i <= n; ++i) {
    int seat = (from + i) % n;
    if (s.is_active(seat) && !s.players[seat].passed) return seat;
  }
  throw StateError("no player can take the turn");
}

uint32_t active_seats_mask(const GameState& s) {
  uint32_t m = 0;
  for (int p = 0; p < s.player_count(); ++p)
    if (s.is_active(p)) m |= 1u << p;
  return m;
}

int find_seat_with_role(const GameState& s, Role r) {
  for (int p = 0; p < s.player_count(); ++p)
    if (s.players[p].role == r) return p;
  return -1;
}

// Picks `count` values from a hand, lowest faces first (strongest) or
// highest first. Jokers carry face value 12.
std::vector<int> forced_pick(const std::vector<int>& hand_desc, int count,
                             bool lowest_first) {
  std::vector<int> sorted = hand_desc;
  if (lowest_first)
    std::sort(sorted.begin(), sorted.end());
  else
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  sorted.resize(static_cast<size_t>(count));
  return sorted;
}

void apply_transfer(GameState& s, int from, int to, const std::vector<int>& values) {
  for (int v : values) {
    if (v < 1 || v > kMaxCardValue || s.players[from].hand[v] < 1)
      throw AgentFault("exchange: card value " + std::to_string(v) +
                       " not held by player " + std::to_string(from));
    bool golden = remove_from_hand(s.players[from], v, 1);
    s.players[to].hand[v] += 1;
    if (golden) s.players[to].holds_golden = true;
  }
}

}  // namespace

std::string special_action_name(SpecialAction a) {
  return a == SpecialAction::FoodFight ? "FoodFight" : "DinnerIsServed";
}

int GameState::active_count() const {
  int n = 0;
  for (const auto& p : players)
    if (hand_size(p.hand) > 0) ++n;
  return n;
}

bool GameState::is_active(int p) const {
  return hand_size(players[static_cast<size_t>(p)].hand) > 0;
}

std::vector<int> GameState::hand_values(int p) const {
  std::vector<int> vals;
  const auto& h = players[static_cast<size_t>(p)].hand;
  for (int v = kMaxCardValue; v >= 1; --v)
    for (int i = 0; i < h[v]; ++i) vals.push_back(v);
  return vals;
}

std::vector<int> default_return_choice(const std::vector<int>& hand, int count) {
  return forced_pick(hand, count, /*lowest_first=*/false);
}

GameState new_game(const DeckConfig& config, uint64_t seed) {
  config.validate();
  GameState s;
  s.config = config;
  s.table = ActionTable(config);
  s.players.resize(static_cast<size_t>(config.player_count));
  s.rng_seed = seed;
  s.rng.seed(seed);
  s.phase = Phase::Dealing;
  s.shift_index = 1;
  prepare_deck(s);
  return s;
}

void deal(GameState& s) {
  if (s.phase != Phase::Dealing) throw StateError("deal: phase is not Dealing");
  if (s.pending_deck.empty()) prepare_deck(s);

  s.board = BoardState{};
  s.discard.fill(0);
  s.discard_golden = false;
  s.set_aside.fill(0);
  s.set_aside_golden = false;
  s.dealt.fill(0);
  s.dealt_golden = false;
  s.prev_finish_order = s.finish_order;
  s.finish_order.clear();
  s.special_player.reset();
  s.special_kind.reset();
  s.special_accepted = false;
  s.exchange_cancelled = false;
  s.last_discarder = -1;
  s.acted_mask = 0;

  int n = s.player_count();
  int per = s.config.cards_per_player();
  for (auto& p : s.players) {
    p.hand.fill(0);
    p.holds_golden = false;
    p.passed = false;
    p.role = Role::None;
    p.initial_cards = per;
  }
  for (int i = 0; i < n * per; ++i) {
    const Card& c = s.pending_deck[static_cast<size_t>(i)];
    auto& p = s.players[static_cast<size_t>(i % n)];
    p.hand[c.value] += 1;
    p.holds_golden = p.holds_golden || c.golden;
  }
  for (size_t i = static_cast<size_t>(n * per); i < s.pending_deck.size(); ++i) {
    const Card& c = s.pending_deck[i];
    s.set_aside[c.value] += 1;
    s.set_aside_golden = s.set_aside_golden || c.golden;
  }
  for (const Card& c : s.pending_deck) {
    s.dealt[c.value] += 1;
    s.dealt_golden = s.dealt_golden || c.golden;
  }
  s.pending_deck.clear();
  s.phase = Phase::Exchange;
}

void assign_roles(GameState& s) {
  if (s.shift_index < 2)
    throw StateError("assign_roles: no previous shift exists");
  int n = s.player_count();
  if (static_cast<int>(s.prev_finish_order.size()) != n)
    throw StateError("assign_roles: previous finish order incomplete");
  for (auto& p : s.players) p.role = Role::None;
  s.players[static_cast<size_t>(s.prev_finish_order[0])].role = Role::Chef;
  s.players[static_cast<size_t>(s.prev_finish_order[static_cast<size_t>(n - 1)])].role =
      Role::Dishwasher;
  if (n >= 4) {
    s.players[static_cast<size_t>(s.prev_finish_order[1])].role = Role::SousChef;
    s.players[static_cast<size_t>(s.prev_finish_order[static_cast<size_t>(n - 2)])].role =
        Role::Waiter;
  } else {
    s.players[static_cast<size_t>(s.prev_finish_order[1])].role = Role::SousChef;
  }
}

std::optional<std::pair<int, SpecialAction>> check_special_action(const GameState& s) {
  if (!s.config.use_special_actions || !s.config.use_joker) return std::nullopt;
  if (s.shift_index < 2) return std::nullopt;
  for (int p = 0; p < s.player_count(); ++p) {
    if (s.players[static_cast<size_t>(p)].hand[kJokerValue] >= 2) {
      SpecialAction kind = s.players[static_cast<size_t>(p)].role == Role::Dishwasher
                               ? SpecialAction::FoodFight
                               : SpecialAction::DinnerIsServed;
      return std::make_pair(p, kind);
    }
  }
  return std::nullopt;
}

void apply_special_action(GameState& s, int player, SpecialAction kind, bool accepted) {
  s.special_player = player;
  s.special_kind = kind;
  s.special_accepted = accepted;
  if (!accepted) return;
  if (kind == SpecialAction::DinnerIsServed) {
    s.exchange_cancelled = true;
    return;
  }
  // Food Fight: the hierarchy inverts for this shift.
  for (auto& p : s.players) {
    switch (p.role) {
      case Role::Chef: p.role = Role::Dishwasher; break;
      case Role::Dishwasher: p.role = Role::Chef; break;
      case Role::SousChef: p.role = Role::Waiter; break;
      case Role::Waiter: p.role = Role::SousChef; break;
      case Role::None: break;
    }
  }
}

std::vector<ExchangeTransfer> perform_exchange(GameState& s, const ReturnChooser& chooser) {
  if (s.phase != Phase::Exchange)
    throw StateError("perform_exchange: phase is not Exchange");
  if (s.shift_index < 2)
    throw StateError("perform_exchange: no roles on the first shift");
  if (s.exchange_cancelled || !s.config.use_card_exchange) return {};

  std::vector<ExchangeTransfer> transfers;
  auto run_leg = [&](Role giver_role, Role taker_role, int count) {
    int giver = find_seat_with_role(s, giver_role);
    int taker = find_seat_with_role(s, taker_role);
    if (giver < 0 || taker < 0) return;
    if (hand_size(s.players[static_cast<size_t>(giver)].hand) < count ||
        hand_size(s.players[static_cast<size_t>(taker)].hand) < count)
      throw StateError("exchange: hand too small");
    // Losers surrender their strongest (lowest face) cards by default; the
    // literal flag flips the Dishwasher leg to highest faces.
    bool lowest = !(s.config.exchange_literal && giver_role == Role::Dishwasher);
    std::vector<int> forced = forced_pick(s.hand_values(giver), count, lowest);
    apply_transfer(s, giver, taker, forced);
    transfers.push_back(ExchangeTransfer{giver, taker, forced, true});

    std::vector<int> returned = chooser(taker, s.hand_values(taker), count);
    if (static_cast<int>(returned.size()) != count)
      throw AgentFault("exchange: wrong number of returned cards");
    apply_transfer(s, taker, giver, returned);
    transfers.push_back(ExchangeTransfer{taker, giver, returned, false});
  };

  run_leg(Role::Dishwasher, Role::Chef, 2);
  run_leg(Role::Waiter, Role::SousChef, 1);
  return transfers;
}

void start_shift_play(GameState& s) {
  if (s.phase != Phase::Exchange)
    throw StateError("start_shift_play: phase is not Exchange");
  int leader = 0;
  for (int p = 0; p < s.player_count(); ++p) {
    if (s.players[static_cast<size_t>(p)].holds_golden) {
      leader = p;
      break;
    }
  }
  s.shift_leader = leader;
  s.turn = leader;
  s.board = BoardState{};
  s.last_discarder = -1;
  s.acted_mask = 0;
  for (auto& p : s.players) p.passed = false;
  s.phase = Phase::Playing;
}

StepOutcome step(GameState& s, int action_id, const RewardSpec& reward) {
  if (s.phase != Phase::Playing) throw StateError("step: phase is not Playing");
  const ActionDescriptor& d = s.table.decode(action_id);  // range-checks

  int actor = s.turn;
  auto& ps = s.players[static_cast<size_t>(actor)];
  BoardTop top = s.board.top();
  bool leader = s.board.empty();

  RewardContext ctx;
  ctx.initial_cards = ps.initial_cards;

  if (!action_is_legal(d, ps.hand, top, leader, s.config)) {
    ps.wrong_actions += 1;
    ctx.cards_left = hand_size(ps.hand);
    StepOutcome out;
    out.accepted = false;
    out.reward = reward.on_proposal(false, ctx, false);
    out.next_turn = actor;
    return out;
  }

  StepEvents ev;
  bool finished = false;
  switch (d.kind) {
    case ActionDescriptor::Kind::Pass:
      ps.passed = true;
      ev.passed = true;
      break;
    case ActionDescriptor::Kind::JokerAlone: {
      move_board_to_discard(s);
      ps.hand[kJokerValue] -= 1;
      BoardState b;
      b.value = kJokerValue;
      b.jokers = 1;
      b.joker_alone = true;
      s.board = b;
      s.last_discarder = actor;
      ev.cards_played = true;
      break;
    }
    case ActionDescriptor::Kind::Discard: {
      move_board_to_discard(s);
      bool golden = remove_from_hand(ps, d.value, d.quantity);
      ps.hand[kJokerValue] -= d.jokers;
      BoardState b;
      b.value = d.value;
      b.cards = d.quantity;
      b.jokers = d.jokers;
      b.has_golden = golden;
      s.board = b;
      s.last_discarder = actor;
      ev.cards_played = true;
      break;
    }
  }

  if (ev.cards_played && hand_size(ps.hand) == 0) {
    s.finish_order.push_back(actor);
    finished = true;
    ev.player_finished = true;
    ev.finish_position = static_cast<int>(s.finish_order.size()) - 1;
  }

  ctx.cards_left = hand_size(ps.hand);
  ctx.finishing_position = finished ? ev.finish_position : -1;
  double r = reward.on_proposal(true, ctx, finished);

  // One round = every still-active player acted since the cycle began.
  s.acted_mask |= 1u << actor;
  uint32_t active = active_seats_mask(s);
  if (active != 0 && (s.acted_mask & active) == active) {
    s.round_index += 1;
    s.acted_mask = 0;
  }

  StepOutcome out;
  out.accepted = true;
  out.reward = r;

  if (s.active_count() <= 1) {
    if (s.active_count() == 1) {
      for (int p = 0; p < s.player_count(); ++p)
        if (s.is_active(p)) s.finish_order.push_back(p);
    }
    s.phase = Phase::ShiftEnd;
    ev.shift_ended = true;
    out.events = ev;
    out.next_turn = actor;
    return out;
  }

  bool pizza_over = true;
  for (int p = 0; p < s.player_count(); ++p) {
    if (!s.is_active(p) || p == s.last_discarder) continue;
    if (!s.players[static_cast<size_t>(p)].passed) {
      pizza_over = false;
      break;
    }
  }

  if (pizza_over) {
    assert(s.last_discarder >= 0);
    move_board_to_discard(s);
    for (auto& p : s.players) p.passed = false;
    int lead = s.is_active(s.last_discarder)
                   ? s.last_discarder
                   : next_active_from(s, s.last_discarder);
    s.last_discarder = -1;
    s.turn = lead;
    s.pizza_count += 1;
    ev.board_cleaned = true;
  } else {
    s.turn = next_active_unpassed_from(s, actor);
  }

  out.events = ev;
  out.next_turn = s.turn;
  return out;
}

void score_shift(GameState& s) {
  if (s.phase != Phase::ShiftEnd)
    throw StateError("score_shift: shift has not ended");
  int n = s.player_count();
  if (static_cast<int>(s.finish_order.size()) != n)
    throw StateError("score_shift: finish order incomplete");

  for (int pos = 0; pos < n; ++pos) {
    int pts = pos < 4 ? kPointsByPosition[pos] : 0;
    s.players[static_cast<size_t>(s.finish_order[static_cast<size_t>(pos)])].score += pts;
  }

  int best = 0;
  for (int p = 1; p < n; ++p)
    if (s.players[static_cast<size_t>(p)].score > s.players[static_cast<size_t>(best)].score)
      best = p;

  if (s.players[static_cast<size_t>(best)].score >= s.config.target_score) {
    // Ties break by this shift's finishing position.
    int top_score = s.players[static_cast<size_t>(best)].score;
    for (int seat : s.finish_order) {
      if (s.players[static_cast<size_t>(seat)].score == top_score) {
        s.winner = seat;
        break;
      }
    }
    s.phase = Phase::GameEnd;
  } else {
    s.shift_index += 1;
    s.phase = Phase::Dealing;
  }
}

Observation observation(const GameState& s, int player) {
  if (player < 0 || player >= s.player_count())
    throw ContractViolation("observation: bad player index");
  int hand_slots = s.config.cards_per_player();
  Observation obs(static_cast<size_t>(hand_slots + s.config.board_slots), 0.0);

  std::vector<int> hand = s.hand_values(player);
  for (size_t i = 0; i < hand.size() && i < static_cast<size_t>(hand_slots); ++i)
    obs[i] = static_cast<double>(hand[i]) / kValueDivisor;

  if (!s.board.empty()) {
    int value = s.board.joker_alone ? kJokerValue : s.board.value;
    int qty = s.board.qty();
    for (int i = 0; i < qty && i < s.config.board_slots; ++i)
      obs[static_cast<size_t>(hand_slots + i)] =
          static_cast<double>(value) / kValueDivisor;
  }
  return obs;
}

ActionMask current_legal_mask(const GameState& s) {
  if (s.phase != Phase::Playing)
    throw StateError("current_legal_mask: phase is not Playing");
  const auto& ps = s.players[static_cast<size_t>(s.turn)];
  return legal_mask(ps.hand, s.board.top(), s.board.empty(), s.config, s.table);
}

void check_conservation(const GameState& s) {
  if (s.phase == Phase::Dealing || s.phase == Phase::GameEnd) return;
  HandCounts total{};
  for (const auto& p : s.players)
    for (int v = 1; v <= kMaxCardValue; ++v) total[v] += p.hand[v];
  for (int v = 1; v <= kMaxCardValue; ++v)
    total[v] += s.discard[v] + s.set_aside[v];
  if (!s.board.empty()) {
    if (s.board.joker_alone) {
      total[kJokerValue] += 1;
    } else {
      total[s.board.value] += s.board.cards;
      total[kJokerValue] += s.board.jokers;
    }
  }
  for (int v = 1; v <= kMaxCardValue; ++v) {
    if (total[v] != s.dealt[v])
      throw StateError("card conservation violated for value " + std::to_string(v));
  }
  if (s.dealt_golden) {
    int golden_spots = (s.discard_golden ? 1 : 0) + (s.set_aside_golden ? 1 : 0) +
                       (s.board.has_golden ? 1 : 0);
    for (const auto& p : s.players) golden_spots += p.holds_golden ? 1 : 0;
    if (golden_spots != 1) throw StateError("golden card duplicated or lost");
  }
}

}  // namespace chefshat
