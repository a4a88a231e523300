#ifndef MAPFORGE_FLAG_IO_HPP
#define MAPFORGE_FLAG_IO_HPP

#include <iosfwd>
#include <string>

#include "mapforge/error.hpp"
#include "mapforge/flag_system.hpp"

namespace mapforge {

/// Grammar error in a flag file. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(Errc::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the text format and validates the result. Grammar violations
/// raise ParseError; invariant violations raise the validate() errors.
FlagSystem read_flag_system(std::istream& in);
FlagSystem parse_flag_system(const std::string& text);

void write_flag_system(std::ostream& out, const FlagSystem& m);
std::string format_flag_system(const FlagSystem& m);

}  // namespace mapforge

#endif  // MAPFORGE_FLAG_IO_HPP
