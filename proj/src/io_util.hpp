#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1/errors.hpp"
#include "dqc1/grid.hpp"

namespace dqc1::io {

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path.string());
  return std::move(buf).str();
}

inline bool is_comment_line(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && line[pos] == '#';
}

/// Splits a text file into lines, dropping comment lines. The first
/// surviving line is the header; the rest are payload.
struct TextBody {
  std::string_view header;
  std::vector<std::string_view> payload;
};

inline TextBody split_body(std::string_view text, const std::string& name) {
  TextBody body;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && !is_comment_line(line)) {
      if (!have_header) {
        body.header = line;
        have_header = true;
      } else {
        body.payload.push_back(line);
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!have_header) throw IoError("malformed " + name + ": empty file");
  return body;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> tokenize_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i <= line.size()) {
    const std::size_t j = line.find(',', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    if (end > i) out.push_back(line.substr(i, end - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

inline double parse_double(std::string_view tok, const std::string& name) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw IoError("malformed " + name + ": bad number '" + std::string(tok) + "'");
  return v;
}

inline std::int64_t parse_int(std::string_view tok, const std::string& name) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw IoError("malformed " + name + ": bad integer '" + std::string(tok) + "'");
  return v;
}

/// Shortest representation that parses back to the same double.
inline void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

/// Parses `rows x cols` values from payload lines into a row-major grid.
/// Line layout is free-form; only the total value count is checked.
template <typename ParseFn>
GridXd parse_grid(const std::vector<std::string_view>& payload, int rows,
                  int cols, const std::string& name, ParseFn&& parse) {
  GridXd g(rows, cols);
  double* out = g.data();
  const std::int64_t want = static_cast<std::int64_t>(rows) * cols;
  std::int64_t got = 0;
  for (const auto line : payload) {
    for (const auto tok : tokenize(line)) {
      if (got >= want)
        throw IoError("malformed " + name + ": more values than the header says");
      out[got++] = parse(tok);
    }
  }
  if (got != want)
    throw IoError("malformed " + name + ": expected " + std::to_string(want) +
                  " values, found " + std::to_string(got));
  return g;
}

}  // namespace dqc1::io
