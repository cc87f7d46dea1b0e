#include "chefshat/agents.hpp"

namespace chefshat {

int RandomAgent::act(const ActContext& ctx) {
  int remaining = ctx.rejected.table_size() - ctx.rejected.count();
  if (remaining <= 0) throw ContractViolation("random agent: no ids left");
  int pick = static_cast<int>(rng_.uniform_int(static_cast<uint64_t>(remaining)));
  for (int id = 0; id < ctx.rejected.table_size(); ++id) {
    if (ctx.rejected.contains(id)) continue;
    if (pick == 0) return id;
    --pick;
  }
  throw ContractViolation("random agent: selection overran the table");
}

int ScriptedAgent::act(const ActContext&) {
  if (actions.empty()) throw AgentFault("scripted agent: action script exhausted");
  int id = actions.front();
  actions.pop_front();
  return id;
}

std::vector<int> ScriptedAgent::choose_return_cards(const std::vector<int>& hand,
                                                    int count) {
  if (return_cards.empty())
    return default_return_choice(hand, count);
  auto cards = return_cards.front();
  return_cards.pop_front();
  return cards;
}

bool ScriptedAgent::accept_special_action(SpecialAction) {
  if (special_choices.empty()) return true;
  bool accept = special_choices.front();
  special_choices.pop_front();
  return accept;
}

}  // namespace chefshat
