#include "e6kkr/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace e6kkr {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  Weight w;
  int count = 0;
  while (true) {
    const auto comma = text.find(',');
    if (count == kRank) throw ParseError("weight has more than six coordinates");
    w[count + 1] = parse_int(text.substr(0, comma), "weight coordinate");
    ++count;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != kRank) throw ParseError("weight needs six comma-separated integers");
  return w;
}

std::string format_path(const Path& path) { return path_to_string(path); }

Path parse_path(std::string_view text) {
  const auto lines = split_lines(text);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (!trim(lines[k]).empty()) throw ParseError("path file must hold a single line");
  }
  Path path;
  if (lines.empty()) return path;
  std::istringstream in{std::string(lines.front())};
  std::string token;
  while (in >> token) {
    const int id = parse_int(token, "vertex id");
    if (id < 1 || id > kCrystalSize) throw ParseError("vertex id out of range 1..27: " + token);
    path.emplace_back(id);
  }
  return path;
}

std::string format_rc(const RiggedConfiguration& rc) {
  RiggedConfiguration canonical = rc;
  canonical.canonicalize();
  std::ostringstream out;
  out << "L " << canonical.length << '\n';
  for (Node a = 1; a <= kRank; ++a) {
    out << "nu" << a << ':';
    for (const Row& row : canonical[a].rows) out << " (" << row.length << ',' << row.rigging << ')';
    out << '\n';
  }
  return out.str();
}

RiggedConfiguration parse_rc(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split_lines(text)) {
    if (!trim(line).empty()) lines.push_back(trim(line));
  }
  if (lines.size() != 1 + kRank) throw ParseError("rigged configuration needs 7 non-blank lines");

  RiggedConfiguration rc;
  if (lines[0].substr(0, 2) != "L ") throw ParseError("first line must be 'L <int>'");
  rc.length = parse_int(lines[0].substr(2), "path length");
  if (rc.length < 0) throw ParseError("negative path length");

  for (Node a = 1; a <= kRank; ++a) {
    std::string_view line = lines[static_cast<std::size_t>(a)];
    const std::string label = "nu" + std::to_string(a) + ":";
    if (line.substr(0, label.size()) != label) throw ParseError("expected line starting with " + label);
    line.remove_prefix(label.size());
    line = trim(line);
    while (!line.empty()) {
      if (line.front() != '(') throw ParseError("expected '(' in " + label);
      const auto close = line.find(')');
      if (close == std::string_view::npos) throw ParseError("unterminated row in " + label);
      const std::string_view body = line.substr(1, close - 1);
      const auto comma = body.find(',');
      if (comma == std::string_view::npos) throw ParseError("row needs 'length,rigging' in " + label);
      Row row{parse_int(body.substr(0, comma), "row length"),
              parse_int(body.substr(comma + 1), "rigging")};
      if (row.length < 1) throw ParseError("row length must be positive in " + label);
      rc[a].rows.push_back(row);
      line = trim(line.substr(close + 1));
    }
  }
  rc.canonicalize();
  return rc;
}

std::string read_file(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw ParseError("cannot open " + filename);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace e6kkr
