#include "chefshat/events.hpp"

#include <set>

namespace chefshat {

FileSink::FileSink(const std::string& path) : out_(path), path_(path) {
  if (!out_) throw DataError("cannot open log file: " + path);
}

FileSink::~FileSink() {
  if (!finalized_ && out_.is_open()) {
    // Partial file: mark the truncation point so replay refuses it cleanly.
    out_ << R"({"kind":"aborted"})" << '\n';
  }
}

void FileSink::write(const Json& record) {
  out_ << record.dump() << '\n';
  if (!out_) throw DataError("log write failed: " + path_);
}

void FileSink::flush() { out_.flush(); }

void BufferSink::drain_to(EventSink& other) {
  for (const auto& line : lines_) other.write(Json::parse(line));
  lines_.clear();
}

Json config_to_json(const DeckConfig& c) {
  Json j;
  j["maxValue"] = c.max_value;
  if (!c.copies_of.empty()) {
    Json copies = Json::object();
    for (const auto& [v, n] : c.copies_of) copies[std::to_string(v)] = n;
    j["copiesOf"] = copies;
  }
  j["jokerCount"] = c.joker_count;
  j["useJoker"] = c.use_joker;
  j["useCardExchange"] = c.use_card_exchange;
  j["useSpecialActions"] = c.use_special_actions;
  j["exchangeLiteral"] = c.exchange_literal;
  j["targetScore"] = c.target_score;
  j["boardSlots"] = c.board_slots;
  j["playerCount"] = c.player_count;
  return j;
}

DeckConfig config_from_json(const Json& j) {
  static const std::set<std::string> known = {
      "maxValue",      "copiesOf",       "jokerCount",
      "useJoker",      "useCardExchange", "useSpecialActions",
      "exchangeLiteral", "targetScore",  "boardSlots",
      "playerCount"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key()))
      throw ConfigError("unknown config key: " + it.key());
  }
  DeckConfig c;
  c.max_value = j.value("maxValue", c.max_value);
  if (j.contains("copiesOf")) {
    for (auto it = j["copiesOf"].begin(); it != j["copiesOf"].end(); ++it)
      c.copies_of[std::stoi(it.key())] = it.value().get<int>();
  }
  c.joker_count = j.value("jokerCount", c.joker_count);
  c.use_joker = j.value("useJoker", c.use_joker);
  c.use_card_exchange = j.value("useCardExchange", c.use_card_exchange);
  c.use_special_actions = j.value("useSpecialActions", c.use_special_actions);
  c.exchange_literal = j.value("exchangeLiteral", c.exchange_literal);
  c.target_score = j.value("targetScore", c.target_score);
  c.board_slots = j.value("boardSlots", c.board_slots);
  c.player_count = j.value("playerCount", c.player_count);
  c.validate();
  return c;
}

namespace {

Json base(const GameState& s, int game, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["game"] = game;
  j["shift"] = s.shift_index;
  j["round"] = s.round_index;
  return j;
}

std::vector<int> scores_of(const GameState& s) {
  std::vector<int> out;
  for (const auto& p : s.players) out.push_back(p.score);
  return out;
}

}  // namespace

void LogWriter::header() {
  Json j;
  j["kind"] = "header";
  j["formatVersion"] = kLogFormatVersion;
  sink_->write(j);
}

void LogWriter::game_start(int game, uint64_t seed, const DeckConfig& config,
                           const std::string& reward_name) {
  Json j;
  j["kind"] = "gameStart";
  j["game"] = game;
  j["seed"] = seed;
  j["configHash"] = config.hash();
  j["config"] = config_to_json(config);
  j["rewardSpec"] = reward_name;
  sink_->write(j);
}

void LogWriter::shift_start(const GameState& s, int game) {
  Json j = base(s, game, "shiftStart");
  std::vector<std::string> roles;
  std::vector<int> hand_sizes;
  for (const auto& p : s.players) {
    roles.push_back(role_name(p.role));
    hand_sizes.push_back(hand_size(p.hand));
  }
  j["roles"] = roles;
  j["handSizes"] = hand_sizes;
  j["leader"] = s.shift_leader;
  sink_->write(j);
}

void LogWriter::special_action(const GameState& s, int game, int player,
                               SpecialAction kind, bool accepted) {
  Json j = base(s, game, "specialAction");
  j["player"] = player;
  j["action"] = special_action_name(kind);
  j["accepted"] = accepted;
  sink_->write(j);
}

void LogWriter::exchange(const GameState& s, int game,
                         const std::vector<ExchangeTransfer>& transfers) {
  Json j = base(s, game, "exchange");
  Json list = Json::array();
  for (const auto& t : transfers) {
    Json e;
    e["from"] = t.from;
    e["to"] = t.to;
    e["cards"] = t.cards;
    e["forced"] = t.forced;
    list.push_back(e);
  }
  j["transfers"] = list;
  sink_->write(j);
}

void LogWriter::proposal(const GameState& s, int game, int player,
                         int action_id, bool valid, double reward) {
  Json j = base(s, game, "proposal");
  j["turnPlayer"] = player;
  j["actionId"] = action_id;
  j["valid"] = valid;
  j["reward"] = reward;
  sink_->write(j);
}

void LogWriter::play(const GameState& s, int game, int player, int action_id,
                     const std::vector<int>& cards) {
  Json j = base(s, game, "play");
  j["turnPlayer"] = player;
  j["actionId"] = action_id;
  j["cards"] = cards;
  Json board = Json::array();
  if (!s.board.empty()) {
    if (s.board.joker_alone) {
      board.push_back(kJokerValue);
    } else {
      for (int i = 0; i < s.board.cards; ++i) board.push_back(s.board.value);
      for (int i = 0; i < s.board.jokers; ++i) board.push_back(kJokerValue);
    }
  }
  j["boardAfter"] = board;
  sink_->write(j);
}

void LogWriter::pizza_end(const GameState& s, int game, int next_leader) {
  Json j = base(s, game, "pizzaEnd");
  j["nextLeader"] = next_leader;
  sink_->write(j);
}

void LogWriter::shift_end(const GameState& s, int game) {
  Json j = base(s, game, "shiftEnd");
  j["finishOrder"] = s.finish_order;
  j["scores"] = scores_of(s);
  sink_->write(j);
}

void LogWriter::game_end(const GameState& s, int game) {
  Json j = base(s, game, "gameEnd");
  j["finishOrder"] = s.finish_order;
  j["scores"] = scores_of(s);
  j["winner"] = s.winner;
  j["shifts"] = s.shift_index;
  j["rounds"] = s.round_index;
  sink_->write(j);
  sink_->flush();
}

}  // namespace chefshat
