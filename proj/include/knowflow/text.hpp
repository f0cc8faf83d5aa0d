#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knowflow {

// Fixed-point decimal formatting via std::to_chars: locale-independent and
// byte-stable across platforms, which golden-file tests rely on.
std::string format_fixed(double value, int places);

// Splits one CSV line on commas. No quoting; the file formats used here
// forbid embedded commas.
std::vector<std::string> split_csv(std::string_view line);

std::string_view trim(std::string_view s);

// Strips a trailing '\r' so CRLF input parses like LF input.
std::string_view strip_cr(std::string_view line);

}  // namespace knowflow
