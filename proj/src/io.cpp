#include "qrbf/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "qrbf/errors.hpp"

namespace qrbf {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_dimension_line(const std::string& raw, int line) {
  const std::string s = trim(raw);
  if (s.rfind("n=", 0) != 0) throw ParseError(line, "expected 'n=<int>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(2), &used);
    if (used != s.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ParseError(line, "malformed dimension '" + s + "'");
  }
  if (n < 0 || n > BooleanFunction::kMaxDimension)
    throw ParseError(line, "dimension " + std::to_string(n) + " out of range");
  return n;
}

}  // namespace

BooleanFunction parse_truth_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(1, "empty input");
  const int n = parse_dimension_line(header, 1);
  std::string table;
  if (!std::getline(in, table)) throw ParseError(2, "missing truth table line");
  table = trim(table);
  BooleanFunction f(n);
  if (table.size() != f.size())
    throw ParseError(2, "expected " + std::to_string(f.size()) + " signs, found " + std::to_string(table.size()));
  for (Point x = 0; x < f.size(); ++x) {
    const char c = table[x];
    if (c != '+' && c != '-')
      throw ParseError(2, std::string("unexpected character '") + c + "' at column " + std::to_string(x + 1));
    f.set(x, c == '+' ? 1 : -1);
  }
  std::string rest;
  int line = 2;
  while (std::getline(in, rest)) {
    ++line;
    if (!trim(rest).empty()) throw ParseError(line, "unexpected trailing content");
  }
  return f;
}

std::string to_truth_table_text(const BooleanFunction& f) {
  std::string s = "n=" + std::to_string(f.n()) + "\n";
  s.reserve(s.size() + f.size() + 1);
  for (Point x = 0; x < f.size(); ++x) s.push_back(f.sign(x) == 1 ? '+' : '-');
  s.push_back('\n');
  return s;
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) { out << to_truth_table_text(f); }

std::vector<std::uint8_t> pack_truth_table(const BooleanFunction& f) {
  std::vector<std::uint8_t> bytes(1 + (f.size() + 7) / 8, 0);
  bytes[0] = static_cast<std::uint8_t>(f.n());
  for (Point x = 0; x < f.size(); ++x)
    if (f.bit(x)) bytes[1 + x / 8] |= static_cast<std::uint8_t>(1u << (x % 8));
  return bytes;
}

BooleanFunction unpack_truth_table(const std::vector<std::uint8_t>& bytes) {
  if (bytes.empty()) throw ParseError(1, "empty packed table");
  const int n = bytes[0];
  if (n > BooleanFunction::kMaxDimension) throw ParseError(1, "dimension " + std::to_string(n) + " out of range");
  BooleanFunction f(n);
  const std::size_t expected = 1 + (f.size() + 7) / 8;
  if (bytes.size() != expected)
    throw ParseError(1, "packed table has " + std::to_string(bytes.size()) + " bytes, expected " +
                            std::to_string(expected));
  for (Point x = 0; x < f.size(); ++x)
    if ((bytes[1 + x / 8] >> (x % 8)) & 1) f.set(x, -1);
  // Padding bits past 2^n must be zero.
  if (f.size() < 8 && (bytes[1] >> f.size()) != 0) throw ParseError(1, "nonzero padding bits");
  return f;
}

BooleanFunction load_truth_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() >= 2 && bytes[0] == 'n' && bytes[1] == '=') {
    std::istringstream text(std::string(bytes.begin(), bytes.end()));
    return parse_truth_table(text);
  }
  return unpack_truth_table(bytes);
}

void save_truth_table(const std::string& path, const BooleanFunction& f, bool packed) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  if (packed) {
    const auto bytes = pack_truth_table(f);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  } else {
    write_truth_table(out, f);
  }
}

}  // namespace qrbf
