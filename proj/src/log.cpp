#include "phylo/log.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace phylo::log {
namespace {

std::atomic<Level> g_threshold{Level::Warning};
std::array<std::atomic<std::size_t>, 4> g_counts{};

constexpr std::array<const char*, 4> kTags{"INFO", "WARNING", "ERROR", "EXCEPTION"};

struct EnvInit {
  EnvInit() { configure_from_env(); }
} g_env_init;

}  // namespace

Level threshold() noexcept { return g_threshold.load(); }

void set_threshold(Level level) noexcept { g_threshold.store(level); }

void configure_from_env() noexcept {
  const char* raw = std::getenv(kLevelEnv);
  if (raw == nullptr) return;
  std::string v(raw);
  for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "info") set_threshold(Level::Info);
  else if (v == "warning") set_threshold(Level::Warning);
  else if (v == "error") set_threshold(Level::Error);
  else if (v == "exception") set_threshold(Level::Exception);
  else if (v == "off") set_threshold(Level::Off);
}

void write(Level level, std::string_view message) {
  if (level == Level::Off) return;
  auto idx = static_cast<std::size_t>(level);
  g_counts[idx].fetch_add(1);
  if (level < threshold()) return;
  std::cerr << '[' << kTags[idx] << "] " << message << '\n';
}

std::size_t emitted(Level level) noexcept {
  if (level == Level::Off) return 0;
  return g_counts[static_cast<std::size_t>(level)].load();
}

}  // namespace phylo::log
