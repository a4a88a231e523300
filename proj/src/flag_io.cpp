#include "mapforge/flag_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mapforge {

namespace {

struct Line {
  std::string text;
  std::size_t number;
};

struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line.number, pos + 1); }

  void skip_spaces() {
    while (pos < line.text.size() && (line.text[pos] == ' ' || line.text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_spaces();
    return pos >= line.text.size();
  }

  void expect(const std::string& word) {
    skip_spaces();
    if (line.text.compare(pos, word.size(), word) != 0) fail("expected '" + word + "'");
    pos += word.size();
  }

  long long number() {
    skip_spaces();
    const char* begin = line.text.data() + pos;
    const char* end = line.text.data() + line.text.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a non-negative integer");
    if (value < 0) fail("expected a non-negative integer");
    if (ptr != end && *ptr != ' ' && *ptr != '\t') {
      pos += static_cast<std::size_t>(ptr - begin);
      fail("unexpected character after number");
    }
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
  }
};

}  // namespace

FlagSystem read_flag_system(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[0] == '#') continue;
    lines.push_back({raw, number});
  }
  std::size_t next = 0;
  auto take = [&](const char* what) -> const Line& {
    if (next >= lines.size()) throw ParseError(std::string("unexpected end of input, expected ") + what, number + 1, 1);
    return lines[next++];
  };

  const Line& rank_line = take("'rank <n>'");
  Cursor rc{rank_line};
  rc.expect("rank");
  long long rank = rc.number();
  if (!rc.at_end()) rc.fail("trailing text after rank");
  if (rank < 1 || rank > 64) rc.fail("rank must be between 1 and 64");

  const Line& flags_line = take("'flags <N>'");
  Cursor fc{flags_line};
  fc.expect("flags");
  long long count = fc.number();
  if (!fc.at_end()) fc.fail("trailing text after flag count");
  if (count < 1 || count > (1LL << 30)) fc.fail("flag count out of range");

  std::vector<Perm> conn;
  for (long long i = 0; i <= rank; ++i) {
    const Line& line = take("a connection line");
    Cursor c{line};
    c.expect("r" + std::to_string(i) + ":");
    Perm p;
    p.reserve(static_cast<std::size_t>(count));
    while (!c.at_end()) {
      std::size_t at = c.pos;
      long long v = c.number();
      if (v >= count) {
        c.pos = at;
        c.fail("flag index " + std::to_string(v) + " out of range");
      }
      if (static_cast<long long>(p.size()) == count) {
        c.pos = at;
        c.fail("too many entries");
      }
      p.push_back(static_cast<Flag>(v));
    }
    if (static_cast<long long>(p.size()) != count) {
      c.fail("expected " + std::to_string(count) + " entries, got " + std::to_string(p.size()));
    }
    conn.push_back(std::move(p));
  }
  if (next != lines.size()) {
    throw ParseError("unexpected text after the last connection", lines[next].number, 1);
  }
  return FlagSystem::validate(static_cast<int>(rank), static_cast<std::size_t>(count), std::move(conn));
}

FlagSystem parse_flag_system(const std::string& text) {
  std::istringstream in(text);
  return read_flag_system(in);
}

void write_flag_system(std::ostream& out, const FlagSystem& m) {
  out << "rank " << m.rank() << "\n";
  out << "flags " << m.size() << "\n";
  for (int i = 0; i <= m.rank(); ++i) {
    out << "r" << i << ":";
    for (Flag f : m.r(i)) out << ' ' << f;
    out << "\n";
  }
}

std::string format_flag_system(const FlagSystem& m) {
  std::ostringstream os;
  write_flag_system(os, m);
  return os.str();
}

}  // namespace mapforge
