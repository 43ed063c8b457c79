#include "zdring/ringtab.hpp"

#include <fstream>
#include <sstream>

#include "zdring/errors.hpp"

namespace zdring {

std::string write_ringtab(const FiniteRing& ring) {
  std::ostringstream out;
  const std::size_t n = ring.order();
  out << "ringtab 1\norder " << n << "\n";
  if (!ring.label().empty()) out << "label " << ring.label() << "\n";
  auto table = [&](const char* name, std::span<const Element> t) {
    out << name << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) out << ' ';
        out << t[i * n + j];
      }
      out << "\n";
    }
  };
  table("add", ring.add_table());
  table("mul", ring.mul_table());
  return out.str();
}

namespace {

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> items;  // (line number, content)
  std::size_t pos = 0;

  bool done() const { return pos >= items.size(); }
  const std::string& peek() const { return items[pos].second; }
  std::size_t line_no() const { return done() ? 0 : items[pos].first; }
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Lines significant_lines(std::string_view text) {
  Lines lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = trim(text.substr(start, end - start));
    if (!line.empty() && line[0] != '#') lines.items.emplace_back(line_no, std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Lines& lines, const std::string& what) {
  throw FormatError("ringtab line " + std::to_string(lines.line_no()) + ": " + what);
}

std::vector<Element> read_table(Lines& lines, const char* name, std::size_t n) {
  if (lines.done() || lines.peek() != name) fail(lines, std::string("expected '") + name + "'");
  ++lines.pos;
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines.done()) throw FormatError(std::string("ringtab: truncated ") + name + " table");
    std::istringstream row(lines.peek());
    long long v = 0;
    std::size_t count = 0;
    while (row >> v) {
      if (v < 0) fail(lines, "negative table entry");
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (!row.eof()) fail(lines, "non-numeric table entry");
    if (count != n) fail(lines, "row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
    ++lines.pos;
  }
  return table;
}

FiniteRing parse_block(Lines& lines, const Limits& limits) {
  if (lines.done() || lines.peek() != "ringtab 1") fail(lines, "expected 'ringtab 1'");
  ++lines.pos;
  if (lines.done() || lines.peek().rfind("order ", 0) != 0) fail(lines, "expected 'order <n>'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const std::string num = lines.peek().substr(6);
    const long long v = std::stoll(num, &used);
    if (used != num.size() || v <= 0) fail(lines, "bad order");
    n = static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    fail(lines, "bad order");
  }
  if (n > limits.order_cap)
    throw OrderCapExceeded("ringtab order " + std::to_string(n) + " exceeds order cap " +
                           std::to_string(limits.order_cap));
  ++lines.pos;
  std::string label;
  if (!lines.done() && lines.peek().rfind("label", 0) == 0 &&
      (lines.peek().size() == 5 || lines.peek()[5] == ' ')) {
    label = lines.peek().size() > 6 ? lines.peek().substr(6) : "";
    ++lines.pos;
  }
  auto add = read_table(lines, "add", n);
  auto mul = read_table(lines, "mul", n);
  return make_ring_flat(n, std::move(add), std::move(mul), std::move(label), limits);
}

}  // namespace

FiniteRing read_ringtab(std::string_view text, const Limits& limits) {
  Lines lines = significant_lines(text);
  FiniteRing ring = parse_block(lines, limits);
  if (!lines.done()) fail(lines, "trailing content after ringtab block");
  return ring;
}

std::vector<FiniteRing> read_ringtabs(std::string_view text, const Limits& limits) {
  Lines lines = significant_lines(text);
  std::vector<FiniteRing> rings;
  while (!lines.done()) rings.push_back(parse_block(lines, limits));
  return rings;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

FiniteRing load_ringtab(const std::filesystem::path& path, const Limits& limits) {
  return read_ringtab(read_text_file(path), limits);
}

void save_ringtab(const FiniteRing& ring, const std::filesystem::path& path) {
  write_text_file(path, write_ringtab(ring));
}

}  // namespace zdring
