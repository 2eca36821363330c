#pragma once

#include <string>

namespace murmur::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from MURMURKIT_LOG (error|warn|info|debug), default warn.
Level threshold();
void set_threshold(Level lv);

void write(Level lv, const std::string& msg);

inline void error(const std::string& m) { write(Level::Error, m); }
inline void warn(const std::string& m)  { write(Level::Warn, m); }
inline void info(const std::string& m)  { write(Level::Info, m); }
inline void debug(const std::string& m) { write(Level::Debug, m); }

} // namespace murmur::log
