#include "ginter/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace ginter {

namespace {

LogLevel parse_env() {
  const char* env = std::getenv("GAUSS_INTERLEAVE_LOG");
  if (!env) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

LogLevel& level_ref() {
  static LogLevel level = parse_env();
  return level;
}

}  // namespace

LogLevel log_level() { return level_ref(); }
void set_log_level(LogLevel level) { level_ref() = level; }

void log_info(std::string_view msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[ginter] " << msg << '\n';
}

void log_debug(std::string_view msg) {
  if (log_level() >= LogLevel::debug) std::cerr << "[ginter:debug] " << msg << '\n';
}

}  // namespace ginter
