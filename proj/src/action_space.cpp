#include "chefshat/action_space.hpp"

namespace chefshat {

ActionTable::ActionTable(const DeckConfig& config) {
  max_value_ = config.max_value;
  joker_states_ = config.use_joker ? 3 : 1;
  value_base_.assign(static_cast<size_t>(max_value_) + 2, 0);
  for (int v = 1; v <= max_value_; ++v) {
    value_base_[static_cast<size_t>(v)] = static_cast<int>(actions_.size());
    for (int q = 1; q <= config.copies(v); ++q) {
      for (int j = 0; j < joker_states_; ++j) {
        actions_.push_back(
            ActionDescriptor{ActionDescriptor::Kind::Discard, v, q, j});
      }
    }
  }
  if (config.use_joker) {
    joker_alone_id_ = static_cast<int>(actions_.size());
    actions_.push_back(ActionDescriptor{ActionDescriptor::Kind::JokerAlone});
  }
  pass_id_ = static_cast<int>(actions_.size());
  actions_.push_back(ActionDescriptor{ActionDescriptor::Kind::Pass});
}

const ActionDescriptor& ActionTable::decode(int id) const {
  if (id < 0 || id >= size())
    throw ContractViolation("action id out of range: " + std::to_string(id));
  return actions_[static_cast<size_t>(id)];
}

int ActionTable::encode(const ActionDescriptor& d) const {
  switch (d.kind) {
    case ActionDescriptor::Kind::Pass:
      return pass_id_;
    case ActionDescriptor::Kind::JokerAlone:
      if (joker_alone_id_ < 0)
        throw ContractViolation("joker-alone not in this table");
      return joker_alone_id_;
    case ActionDescriptor::Kind::Discard: {
      if (d.value < 1 || d.value > max_value_)
        throw ContractViolation("encode: value out of range");
      int id = value_base_[static_cast<size_t>(d.value)] +
               joker_states_ * (d.quantity - 1) + d.jokers;
      if (id < 0 || id >= size() || !(decode(id) == d))
        throw ContractViolation("encode: descriptor not in table");
      return id;
    }
  }
  throw ContractViolation("encode: bad descriptor");
}

bool action_is_legal(const ActionDescriptor& d, const HandCounts& hand,
                     const BoardTop& top, bool is_leader,
                     const DeckConfig& config) {
  switch (d.kind) {
    case ActionDescriptor::Kind::Pass:
      return !(is_leader && top.empty());
    case ActionDescriptor::Kind::JokerAlone:
      return hand[kJokerValue] >= 1 && top.empty();
    case ActionDescriptor::Kind::Discard: {
      if (hand[d.value] < d.quantity) return false;
      if (hand[kJokerValue] < d.jokers) return false;
      int played = d.quantity + d.jokers;
      if (played > config.board_slots) return false;
      if (top.empty()) return true;
      return d.value < top.value && played >= top.qty;
    }
  }
  return false;
}

ActionMask legal_mask(const HandCounts& hand, const BoardTop& top,
                      bool is_leader, const DeckConfig& config,
                      const ActionTable& table) {
  ActionMask mask(static_cast<size_t>(table.size()), 0);
  for (int id = 0; id < table.size(); ++id) {
    if (action_is_legal(table.decode(id), hand, top, is_leader, config))
      mask[static_cast<size_t>(id)] = 1;
  }
  return mask;
}

}  // namespace chefshat
