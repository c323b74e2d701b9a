#pragma once

#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace seclr {

enum class MsgType { submission, aggregate, beta_broadcast };

std::string msg_type_name(MsgType t);

// One protocol message as it would appear on the wire. bytes is the length
// of the canonical JSON line; time_seconds is the offset from transcript
// creation (excluded from any reproducibility contract).
struct Message {
  MsgType type = MsgType::submission;
  unsigned iteration = 0;
  std::string sender;
  std::string receiver;
  nlohmann::json body;
  std::size_t bytes = 0;
  double time_seconds = 0.0;
};

// Append-only log of every message exchanged in a protocol run. Appends are
// serialized; the coordinator appends in a fixed order so transcripts are
// bit-reproducible under a fixed seed.
class Transcript {
 public:
  Transcript();

  void append(MsgType type, unsigned iteration, std::string sender,
              std::string receiver, nlohmann::json body);

  const std::vector<Message>& messages() const { return messages_; }
  std::uint64_t total_bytes() const;

  static std::string serialize_line(const Message& m);
  void write_jsonl(const std::string& path) const;

 private:
  std::vector<Message> messages_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace seclr
