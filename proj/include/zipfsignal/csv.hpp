#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace zipfsignal::csvio {

// Splits one CSV line. Double quotes delimit fields that contain commas or
// quotes; "" inside a quoted field is a literal quote.
std::vector<std::string> split_line(const std::string& line);

// Joins fields into one CSV line, quoting only when necessary.
std::string join_row(const std::vector<std::string>& fields);

// Line-oriented reader that tracks line numbers for error messages.
// Skips blank lines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Returns false at end of input.
  bool next(std::vector<std::string>& row);
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

// Reads a whole CSV file. Throws DataError if the file cannot be opened.
std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace zipfsignal::csvio
