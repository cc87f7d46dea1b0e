#pragma once

#include <string>
#include <string_view>

#include "chefshat/common.hpp"

namespace chefshat {

struct RewardContext {
  int cards_left = 0;       // hand size after the action
  int initial_cards = 0;    // hand size at deal
  int finishing_position = -1;  // 0..3 once the player has finished, else -1
};

// Pluggable per-proposal reward. `rules` rewards validity alone; `win`
// rewards hand progress plus a finishing bonus; `win-literal` keeps the
// unconverted progress expression for comparison.
class RewardSpec {
 public:
  enum class Kind { Rules, Win, WinLiteral };

  RewardSpec() : kind_(Kind::Rules) {}
  explicit RewardSpec(Kind k) : kind_(k) {}
  static RewardSpec by_name(std::string_view name);

  Kind kind() const { return kind_; }
  std::string name() const;

  // Reward for one proposal. `finished` marks the action that emptied the
  // acting player's hand (ctx.finishing_position is then set).
  double on_proposal(bool valid, const RewardContext& ctx, bool finished) const;

 private:
  Kind kind_;
};

double rules_reward(bool valid);
double win_reward(bool valid, const RewardContext& ctx, bool finished,
                  bool literal_progress);

}  // namespace chefshat
