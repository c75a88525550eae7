#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace branchlaw {

std::vector<std::string> split(std::string_view s, char sep);
/// Splits on runs of whitespace and commas; empty tokens are dropped.
std::vector<std::string> tokenize(std::string_view s);
std::string trim(std::string_view s);
/// Text before the first '#'.
std::string_view strip_comment(std::string_view s);
/// Non-negative decimal integer; throws ParseError otherwise.
std::size_t parse_size(std::string_view s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace branchlaw
