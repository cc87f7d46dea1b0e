#pragma once

#include <deque>
#include <string>
#include <vector>

#include "chefshat/action_space.hpp"
#include "chefshat/engine.hpp"

namespace chefshat {

// Ids rejected earlier in the same turn. Agents must never re-propose one.
class RejectedSet {
 public:
  explicit RejectedSet(int table_size)
      : bits_(static_cast<size_t>(table_size), 0) {}

  bool contains(int id) const { return bits_[static_cast<size_t>(id)] != 0; }
  void insert(int id) {
    if (!contains(id)) {
      bits_[static_cast<size_t>(id)] = 1;
      ++count_;
    }
  }
  int count() const { return count_; }
  int table_size() const { return static_cast<int>(bits_.size()); }

 private:
  std::vector<uint8_t> bits_;
  int count_ = 0;
};

struct Experience {
  Observation state;
  int action = 0;
  double reward = 0.0;
  Observation next_state;
  bool terminal = false;
};

struct ActContext {
  const Observation& obs;
  const RejectedSet& rejected;
  // Legality mask for this turn. Built-in learners ignore it and learn
  // legality from punished proposals; the net bridge forwards it to remote
  // players.
  const ActionMask& mask;
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual int act(const ActContext& ctx) = 0;
  virtual void observe(const Experience&) {}
  virtual std::vector<int> choose_return_cards(const std::vector<int>& hand,
                                               int count) {
    return default_return_choice(hand, count);
  }
  virtual bool accept_special_action(SpecialAction) { return true; }
  virtual void on_game_end(int /*final_rank*/) {}
  // Called before each game with a stream derived from (seed, game, seat),
  // so parallel workers and sequential runs see identical games.
  virtual void reseed(uint64_t) {}
  virtual std::string kind() const = 0;
};

// Uniform proposals over the ids not yet rejected this turn.
class RandomAgent : public Agent {
 public:
  explicit RandomAgent(uint64_t seed) : rng_(seed) {}

  int act(const ActContext& ctx) override;
  void reseed(uint64_t seed) override { rng_.seed(seed); }
  std::string kind() const override { return "random"; }

 private:
  Rng rng_;
};

// Replays prerecorded decisions; used by log replay and the bridged
// determinism checks.
class ScriptedAgent : public Agent {
 public:
  std::deque<int> actions;
  std::deque<std::vector<int>> return_cards;
  std::deque<bool> special_choices;

  int act(const ActContext&) override;
  std::vector<int> choose_return_cards(const std::vector<int>& hand,
                                       int count) override;
  bool accept_special_action(SpecialAction) override;
  std::string kind() const override { return "scripted"; }
};

}  // namespace chefshat
