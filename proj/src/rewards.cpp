#include "chefshat/rewards.hpp"

#include <algorithm>

namespace chefshat {

RewardSpec RewardSpec::by_name(std::string_view name) {
  if (name == "rules") return RewardSpec(Kind::Rules);
  if (name == "win") return RewardSpec(Kind::Win);
  if (name == "win-literal") return RewardSpec(Kind::WinLiteral);
  throw ConfigError("unknown reward spec: " + std::string(name));
}

std::string RewardSpec::name() const {
  switch (kind_) {
    case Kind::Rules: return "rules";
    case Kind::Win: return "win";
    case Kind::WinLiteral: return "win-literal";
  }
  return "rules";
}

double rules_reward(bool valid) { return valid ? 1.0 : -1.0; }

double win_reward(bool valid, const RewardContext& ctx, bool finished,
                  bool literal_progress) {
  if (!valid) return -1.0;
  if (ctx.initial_cards <= 0)
    throw ContractViolation("win_reward: initial_cards must be positive");
  double progress;
  if (literal_progress) {
    // (1 - cardsHand) * 100 / initialCardsHand * 0.01 * 0.7, unconverted
    progress = (1.0 - ctx.cards_left) * 100.0 / ctx.initial_cards * 0.01 * 0.7;
  } else {
    progress =
        (1.0 - static_cast<double>(ctx.cards_left) / ctx.initial_cards) * 0.7;
  }
  double r = progress;
  if (finished) r += (1.0 - ctx.finishing_position * 0.3) * 0.3;
  return std::clamp(r, -1.0, 1.0);
}

double RewardSpec::on_proposal(bool valid, const RewardContext& ctx,
                               bool finished) const {
  switch (kind_) {
    case Kind::Rules:
      return rules_reward(valid);
    case Kind::Win:
      return win_reward(valid, ctx, finished, false);
    case Kind::WinLiteral:
      return win_reward(valid, ctx, finished, true);
  }
  return rules_reward(valid);
}

}  // namespace chefshat
