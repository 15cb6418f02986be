#include "relaxsolve/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

namespace relaxsolve {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), ptr);
}

namespace {

std::string join_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Errors go into a single CSV cell.
std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

}  // namespace

std::string to_csv(const CsvTable& table) {
  std::string out = join_row(table.header) + '\n';
  for (const auto& row : table.rows) out += join_row(row) + '\n';
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      table.header = split_row(line);
      first = false;
    } else if (!line.empty()) {
      table.rows.push_back(split_row(line));
    }
  }
  return table;
}

CsvTable profile_table(const Model& model, const FieldState& field) {
  CsvTable table;
  table.header.push_back("x");
  for (const auto& name : model.primitive_names()) table.header.push_back(name);
  table.rows.reserve(field.cells.size());
  for (std::size_t j = 0; j < field.cells.size(); ++j) {
    std::vector<std::string> row{format_real(field.grid.center(j))};
    for (double p : model.to_primitive(field.cells[j]).values()) row.push_back(format_real(p));
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable sweep_table(const SweepResult& result) {
  CsvTable table;
  table.header = {"parameter", "l2", "linf", "rate", "runtime_s", "error"};
  for (const auto& r : result.rows) {
    table.rows.push_back({format_real(r.parameter), format_real(r.l2), format_real(r.linf),
                          r.rate ? format_real(*r.rate) : std::string(), format_real(r.runtime_s),
                          sanitize(r.error)});
  }
  return table;
}

std::string sweep_plot_script(const SweepResult& result, const std::string& csv_name) {
  const bool eps = result.parameter_name == "eps";
  std::ostringstream gp;
  gp << "# gnuplot -p " << (eps ? "eps" : "dx") << " sweep\n"
     << "set datafile separator ','\n"
     << "set logscale xy\n"
     << "set format x '10^{%L}'\n"
     << "set format y '10^{%L}'\n"
     << "set grid\n"
     << "set key top left\n"
     << "set xlabel '" << (eps ? "{/Symbol e}" : "{/Symbol D}x") << "'\n"
     << "set ylabel 'error'\n";
  gp << "plot '" << csv_name << "' using 1:2 skip 1 with linespoints title 'L2', \\\n"
     << "     '" << csv_name << "' using 1:3 skip 1 with linespoints title 'Linf'";
  if (!eps) {
    // First-order slope through the finest successful point.
    for (const auto& r : result.rows) {
      if (r.error.empty() && std::isfinite(r.l2) && r.l2 > 0.0) {
        gp << ", \\\n     " << format_real(r.l2 / r.parameter) << "*x with lines dashtype 2 title 'order 1'";
        break;
      }
    }
  }
  gp << '\n';
  return gp.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move '" + tmp.string() + "' to '" + path + "': " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace relaxsolve
