#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swbench/core/field.hpp"

// Gnuplot-ready column format: '#'-prefixed header lines, one space-separated
// row per cell, '.' decimals, 15 significant digits, LF endings.
namespace swb::ascii {

inline constexpr int kFormatVersion = 1;

// Shortest form with at most 15 significant digits; -0 prints as 0.
std::string format_number(double v);

// The value a reader gets back after format_number.
double quantize(double v);
// Fields as they read back from a file (h, u, v, z, q at 15 digits).
FlowField1D quantized(const FlowField1D& f);
FlowField2D quantized(const FlowField2D& f);

std::vector<std::string> columns_1d(bool compat);
std::vector<std::string> columns_2d();

// Header lines are written as "# <line>", followed by the format-version line
// first and the columns line last.
void write(std::ostream& os, const std::vector<std::string>& header, const FlowField1D& f, bool compat = false);
void write(std::ostream& os, const std::vector<std::string>& header, const FlowField2D& f);

struct Document {
  std::vector<std::string> header;  // without the leading '#', trimmed
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  // Index of a column, or -1.
  int column(const std::string& name) const;
};

// Throws ParseError carrying the 1-based line number.
Document parse(std::istream& is);
Document parse_file(const std::string& path);

// Needs at least x and h; u, z and q are optional (q defaults to h u).
FlowField1D to_field_1d(const Document& doc);
// Needs x, y and h; nx is recovered from the first run of equal y.
FlowField2D to_field_2d(const Document& doc);

}  // namespace swb::ascii
