#pragma once

// Internal line-oriented parsing helpers shared by the file loaders.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "polypres/error.hpp"
#include "polypres/hash.hpp"

namespace polypres::textio {

// next content line: blank lines skipped, trailing whitespace (and \r) trimmed
inline bool next_line(std::istream& in, std::string& line,
                      bool skip_comments = true) {
  while (std::getline(in, line)) {
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    if (skip_comments && line[0] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline void expect(bool cond, const std::string& message) {
  if (!cond) fail(Errc::parse_error, message);
}

inline int parse_int(const std::string& tok, const std::string& what) {
  expect(!tok.empty(), what + ": empty token");
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    fail(Errc::parse_error, what + ": not a number: " + tok);
  }
  expect(pos == tok.size(), what + ": trailing garbage: " + tok);
  expect(v >= 0 && v <= 1'000'000, what + ": out of range: " + tok);
  return v;
}

// "p12" -> 12 for prefix "p"; likewise "L3", "t" records handle themselves
inline int parse_indexed(const std::string& tok, char prefix,
                         const std::string& what) {
  expect(tok.size() >= 2 && tok[0] == prefix,
         what + ": expected " + std::string(1, prefix) + "<i>, got " + tok);
  return parse_int(tok.substr(1), what);
}

// "x12^3" -> (12, 3) for role 'x' or 'y'; copy is 1-based in files
inline std::pair<int, int> parse_label(const std::string& tok, char role,
                                       const std::string& what) {
  expect(tok.size() >= 4 && tok[0] == role,
         what + ": expected " + std::string(1, role) + "<i>^<t>, got " + tok);
  size_t caret = tok.find('^');
  expect(caret != std::string::npos && caret >= 2 && caret + 1 < tok.size(),
         what + ": malformed label " + tok);
  int i = parse_int(tok.substr(1, caret - 1), what);
  int t = parse_int(tok.substr(caret + 1), what);
  expect(t >= 1, what + ": copy index must be 1-based in " + tok);
  return {i, t};
}

// "key=value" -> value
inline std::string field(const std::string& tok, const std::string& key) {
  expect(tok.size() > key.size() + 1 && tok.compare(0, key.size(), key) == 0 &&
             tok[key.size()] == '=',
         "expected " + key + "=<value>, got " + tok);
  return tok.substr(key.size() + 1);
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open for reading: " + path);
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path);
  return out;
}

// the second line of every derived artifact; key-hash pairs in fixed order
inline std::string derived_from_line(
    const std::vector<std::pair<std::string, uint64_t>>& inputs) {
  std::string s = "# derived-from:";
  for (const auto& [key, h] : inputs) s += " " + key + " " + hash_hex(h);
  return s;
}

// parses the line produced by derived_from_line; keys must match in order
inline std::vector<uint64_t> parse_derived_from(
    const std::string& line, const std::vector<std::string>& keys) {
  auto toks = split(line);
  expect(toks.size() == 2 + 2 * keys.size() && toks[0] == "#" &&
             toks[1] == "derived-from:",
         "expected derived-from comment, got: " + line);
  std::vector<uint64_t> out;
  for (size_t i = 0; i < keys.size(); ++i) {
    expect(toks[2 + 2 * i] == keys[i],
           "derived-from: expected key " + keys[i] + ", got " + toks[2 + 2 * i]);
    out.push_back(parse_hash_hex(toks[3 + 2 * i]));
  }
  return out;
}

} // namespace polypres::textio
