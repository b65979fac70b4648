#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "anysort/bench.hpp"

namespace anysort {

namespace {

constexpr std::string_view kHeader = "algorithm,estimator,n,step,quantile,value";

std::string format_value(double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

// Shortest representation that reads back exactly.
std::string format_level(double v) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

template <typename T>
T parse_field(std::string_view text, std::size_t line_no, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad " + std::string(what) +
                             " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kHeader << '\n';
  for (const ResultRow& row : rows) {
    out << row.algorithm << ',' << row.estimator << ',' << row.n << ',';
    if (row.step) out << *row.step;
    out << ',' << format_level(row.quantile) << ',' << format_value(row.value) << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("csv: missing or unexpected header");
  }
  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view rest(line);
    std::string_view fields[6];
    for (std::size_t f = 0; f < 6; ++f) {
      const std::size_t comma = rest.find(',');
      if ((f < 5) == (comma == std::string_view::npos)) {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 6 fields");
      }
      fields[f] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    ResultRow row;
    row.algorithm = std::string(fields[0]);
    row.estimator = std::string(fields[1]);
    row.n = parse_field<std::size_t>(fields[2], line_no, "n");
    if (!fields[3].empty()) row.step = parse_field<std::size_t>(fields[3], line_no, "step");
    row.quantile = parse_field<double>(fields[4], line_no, "quantile");
    row.value = parse_field<double>(fields[5], line_no, "value");
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_csv(std::vector<ResultRow> rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows to write");
  sort_rows(rows);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_csv(rows, out);
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write to '" + path + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot write '" + path + "': " + ec.message());
  }
}

std::vector<ResultRow> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return read_csv(in);
}

}  // namespace anysort
