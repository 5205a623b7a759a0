#pragma once

#include <string_view>

namespace ginter {

// Log level comes from GAUSS_INTERLEAVE_LOG (quiet|info|debug), default info.
enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level();
void set_log_level(LogLevel level);

void log_info(std::string_view msg);
void log_debug(std::string_view msg);

}  // namespace ginter
