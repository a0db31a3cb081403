#pragma once

// Small text helpers shared by the readers and writers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phylo::text {

/// Splits on LF, stripping a trailing CR from each line.
std::vector<std::string_view> lines(std::string_view s);

std::string_view trim(std::string_view s) noexcept;

/// Splits on runs of spaces and tabs.
std::vector<std::string_view> fields(std::string_view s);

std::string lower(std::string_view s);

std::optional<double> parse_double(std::string_view s) noexcept;

/// Shortest decimal that parses back to the same double; integral values
/// print without a decimal point.
std::string format_double(double v);

bool is_unsigned_integer(std::string_view s) noexcept;

}  // namespace phylo::text
