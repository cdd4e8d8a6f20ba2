#pragma once

#include <string>

namespace clscnd::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Off = 3 };

// Threshold parsed once from the CLSCND_LOG environment variable
// ("debug" | "info" | "warn" | "off"); unset or unknown means "warn".
Level threshold();

// Writes "[clscnd] level: text" to stderr when `level` passes the threshold.
void message(Level level, const std::string& text);

inline void debug(const std::string& text) { message(Level::Debug, text); }
inline void info(const std::string& text) { message(Level::Info, text); }
inline void warn(const std::string& text) { message(Level::Warn, text); }

}  // namespace clscnd::log
