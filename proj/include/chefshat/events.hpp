#pragma once

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "chefshat/common.hpp"
#include "chefshat/deck.hpp"
#include "chefshat/engine.hpp"

namespace chefshat {

inline constexpr int kLogFormatVersion = 1;

using Json = nlohmann::json;

// One JSON object per line. Keys serialize alphabetically, which is the
// documented field order; logs are byte-stable across runs.
class EventSink {
 public:
  virtual ~EventSink() = default;
  virtual void write(const Json& record) = 0;
  virtual void flush() {}
};

class NullSink : public EventSink {
 public:
  void write(const Json&) override {}
};

class FileSink : public EventSink {
 public:
  explicit FileSink(const std::string& path);
  ~FileSink() override;
  void write(const Json& record) override;
  void flush() override;
  void finalize() { finalized_ = true; }

 private:
  std::ofstream out_;
  std::string path_;
  bool finalized_ = false;
};

// Collects serialized lines in memory; used for worker-ordered assembly and
// by tests.
class BufferSink : public EventSink {
 public:
  void write(const Json& record) override { lines_.push_back(record.dump()); }
  const std::vector<std::string>& lines() const { return lines_; }
  void drain_to(EventSink& other);

 private:
  std::vector<std::string> lines_;
};

Json config_to_json(const DeckConfig& c);
DeckConfig config_from_json(const Json& j);  // rejects unknown keys

// Emits the event schema used by logs and replay.
class LogWriter {
 public:
  explicit LogWriter(EventSink& sink) : sink_(&sink) {}

  void header();
  void game_start(int game, uint64_t seed, const DeckConfig& config,
                  const std::string& reward_name);
  void shift_start(const GameState& s, int game);
  void special_action(const GameState& s, int game, int player,
                      SpecialAction kind, bool accepted);
  void exchange(const GameState& s, int game,
                const std::vector<ExchangeTransfer>& transfers);
  void proposal(const GameState& s, int game, int player, int action_id,
                bool valid, double reward);
  void play(const GameState& s, int game, int player, int action_id,
            const std::vector<int>& cards);
  void pizza_end(const GameState& s, int game, int next_leader);
  void shift_end(const GameState& s, int game);
  void game_end(const GameState& s, int game);
  void flush() { sink_->flush(); }

 private:
  EventSink* sink_;
};

}  // namespace chefshat
