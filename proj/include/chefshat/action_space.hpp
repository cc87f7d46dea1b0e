#pragma once

#include <cstdint>
#include <vector>

#include "chefshat/deck.hpp"

namespace chefshat {

struct ActionDescriptor {
  enum class Kind { Discard, JokerAlone, Pass };
  Kind kind = Kind::Pass;
  int value = 0;     // Discard only
  int quantity = 0;  // Discard only, plain copies of `value`
  int jokers = 0;    // Discard only, jokers played alongside

  bool operator==(const ActionDescriptor&) const = default;
};

// Current top play on the board: `value` repeated `qty` times (jokers assume
// the value). Empty board has qty == 0.
struct BoardTop {
  int value = 0;
  int qty = 0;
  bool empty() const { return qty == 0; }
};

using ActionMask = std::vector<uint8_t>;

// Canonical enumeration of the discrete action space. With jokers enabled the
// layout is id(v,q,j) = 3*prefix(v) + 3*(q-1) + j followed by joker-alone and
// pass; without jokers the j axis and the joker-alone entry are dropped.
// Default config: 3*66 + 1 + 1 = 200 ids.
class ActionTable {
 public:
  explicit ActionTable(const DeckConfig& config);
  ActionTable() = default;

  int size() const { return static_cast<int>(actions_.size()); }
  int pass_id() const { return pass_id_; }
  int joker_alone_id() const { return joker_alone_id_; }  // -1 when absent

  const ActionDescriptor& decode(int id) const;
  int encode(const ActionDescriptor& d) const;

 private:
  std::vector<ActionDescriptor> actions_;
  std::vector<int> value_base_;  // first discard id per value
  int joker_states_ = 3;
  int pass_id_ = -1;
  int joker_alone_id_ = -1;
  int max_value_ = 0;
};

// Legality of one descriptor against a hand/board context. `is_leader` means
// the acting player opens the current pizza (pass is then illegal on an empty
// board).
bool action_is_legal(const ActionDescriptor& d, const HandCounts& hand,
                     const BoardTop& top, bool is_leader,
                     const DeckConfig& config);

// Per-turn mask over the whole table, built on the fly.
ActionMask legal_mask(const HandCounts& hand, const BoardTop& top,
                      bool is_leader, const DeckConfig& config,
                      const ActionTable& table);

}  // namespace chefshat
