#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cthh::cli {

// Left-aligned text table with a header rule.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Two-column key/value listing.
void print_pairs(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace cthh::cli
