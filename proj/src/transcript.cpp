#include "seclr/transcript.hpp"

#include <chrono>
#include <fstream>

#include "seclr/errors.hpp"

namespace seclr {

std::string msg_type_name(MsgType t) {
  switch (t) {
    case MsgType::submission:
      return "submission";
    case MsgType::aggregate:
      return "aggregate";
    case MsgType::beta_broadcast:
      return "beta_broadcast";
  }
  return "unknown";
}

Transcript::Transcript() : start_(std::chrono::steady_clock::now()) {}

std::string Transcript::serialize_line(const Message& m) {
  nlohmann::json j{{"msg_type", msg_type_name(m.type)},
                   {"iteration", m.iteration},
                   {"sender", m.sender},
                   {"receiver", m.receiver},
                   {"body", m.body}};
  return j.dump();
}

void Transcript::append(MsgType type, unsigned iteration, std::string sender,
                        std::string receiver, nlohmann::json body) {
  Message m;
  m.type = type;
  m.iteration = iteration;
  m.sender = std::move(sender);
  m.receiver = std::move(receiver);
  m.body = std::move(body);
  m.bytes = serialize_line(m).size() + 1;  // trailing newline on the wire
  std::lock_guard<std::mutex> lock(mutex_);
  m.time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
          .count();
  messages_.push_back(std::move(m));
}

std::uint64_t Transcript::total_bytes() const {
  std::uint64_t total = 0;
  for (const Message& m : messages_) total += m.bytes;
  return total;
}

void Transcript::write_jsonl(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io_error, "cannot write " + path);
  for (const Message& m : messages_) {
    out << serialize_line(m) << "\n";
  }
  require(out.good(), Errc::io_error, "write failed for " + path);
}

}  // namespace seclr
