#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace prc::detail {

std::string_view Trim(std::string_view text);

// One record per returned entry; `#` comment lines and blank lines are
// dropped. `line` is 1-based within the document.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<CsvRecord> ReadCsv(std::string_view document);

std::string ReadFile(const std::string& path);

bool EndsWithIgnoreCase(std::string_view text, std::string_view suffix);

}  // namespace prc::detail
