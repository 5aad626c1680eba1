#pragma once

#include <string>

namespace epifuse::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

/// Active level, read once from EPIFUSE_LOG (debug|info|warn|error|off).
/// Defaults to warn.
Level level();

void write(Level lvl, const std::string& msg);

inline void debug(const std::string& msg) { write(Level::debug, msg); }
inline void info(const std::string& msg) { write(Level::info, msg); }
inline void warn(const std::string& msg) { write(Level::warn, msg); }
inline void error(const std::string& msg) { write(Level::error, msg); }

} // namespace epifuse::log
