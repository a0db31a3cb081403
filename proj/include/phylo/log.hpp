#pragma once

#include <string_view>

namespace phylo::log {

enum class Level { Info = 0, Warning = 1, Error = 2, Exception = 3, Off = 4 };

/// Name of the environment variable that sets the minimum emitted level
/// (info, warning, error, exception, off). Defaults to warning.
inline constexpr const char* kLevelEnv = "PHYLO_LOG_LEVEL";

Level threshold() noexcept;
void set_threshold(Level level) noexcept;
/// Re-reads the threshold from the environment.
void configure_from_env() noexcept;

/// Emits to stderr. Data output never goes through here.
void write(Level level, std::string_view message);

inline void info(std::string_view m) { write(Level::Info, m); }
inline void warning(std::string_view m) { write(Level::Warning, m); }
inline void error(std::string_view m) { write(Level::Error, m); }
inline void exception(std::string_view m) { write(Level::Exception, m); }

/// Count of messages raised at each level since start, including those below
/// the threshold; tests use it to observe warnings with output silenced.
std::size_t emitted(Level level) noexcept;

}  // namespace phylo::log
