#include "oscar/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace oscar::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("OSCAR_LOG");
  if (env == nullptr) return Level::Warn;
  std::string_view v(env);
  if (v == "error") return Level::Error;
  if (v == "warn") return Level::Warn;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

constexpr std::string_view tag(Level level) {
  switch (level) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

std::mutex g_mutex;

}  // namespace

Level threshold() {
  static const Level level = parse_env();
  return level;
}

void write(Level level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(threshold())) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "[oscar:" << tag(level) << "] " << msg << "\n";
}

}  // namespace oscar::log
