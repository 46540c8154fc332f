#include "swbench/ascii.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/criticality.hpp"
#include "swbench/core/errors.hpp"

namespace swb::ascii {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

double quantize(double v) {
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

namespace {
void quantize_all(std::vector<double>& v) {
  for (auto& x : v) x = quantize(x);
}
}  // namespace

FlowField1D quantized(const FlowField1D& f) {
  FlowField1D g = f;
  quantize_all(g.h);
  quantize_all(g.u);
  quantize_all(g.z);
  quantize_all(g.q);
  return g;
}

FlowField2D quantized(const FlowField2D& f) {
  FlowField2D g = f;
  quantize_all(g.h);
  quantize_all(g.u);
  quantize_all(g.v);
  quantize_all(g.z);
  return g;
}

std::vector<std::string> columns_1d(bool compat) {
  if (compat) return {"x", "h", "u", "z"};
  return {"x", "h", "u", "z", "q", "z+h", "Fr", "h_c"};
}

std::vector<std::string> columns_2d() { return {"x", "y", "h", "u", "v", "z", "z+h"}; }

namespace {

void write_header(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::string>& cols) {
  os << "# swbench format " << kFormatVersion << '\n';
  for (const auto& line : header) os << "# " << line << '\n';
  os << "# columns:";
  for (const auto& c : cols) os << ' ' << c;
  os << '\n';
}

void write_row(std::ostream& os, const double* v, std::size_t n) {
  std::string line;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) line += ' ';
    line += format_number(v[k]);
  }
  line += '\n';
  os << line;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

void write(std::ostream& os, const std::vector<std::string>& header, const FlowField1D& f, bool compat) {
  write_header(os, header, columns_1d(compat));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double h = f.h[i];
    if (compat) {
      const double row[4] = {f.x[i], h, f.u[i], f.z[i]};
      write_row(os, row, 4);
      continue;
    }
    const double q = f.q.empty() ? h * f.u[i] : f.q[i];
    double fr = 0.0;
    if (!f.froude.empty()) {
      fr = f.froude[i];
    } else if (h > kDryThreshold) {
      fr = froude(h, f.u[i]);
    }
    const double hc = f.critical.empty() ? critical_height(std::abs(q)) : f.critical[i];
    const double row[8] = {f.x[i], h, f.u[i], f.z[i], q, f.z[i] + h, fr, hc};
    write_row(os, row, 8);
  }
}

void write(std::ostream& os, const std::vector<std::string>& header, const FlowField2D& f) {
  write_header(os, header, columns_2d());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double row[7] = {f.x[k], f.y[k], f.h[k], f.u[k], f.v[k], f.z[k], f.z[k] + f.h[k]};
    write_row(os, row, 7);
    // Blank line between rows of constant y keeps gnuplot's splot happy.
    if (f.nx && (k + 1) % f.nx == 0 && k + 1 < f.size()) os << '\n';
  }
}

int Document::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Document parse(std::istream& is) {
  Document doc;
  std::string line;
  std::size_t lineno = 0;
  bool have_columns = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      if (body.rfind("columns:", 0) == 0) {
        std::istringstream cs(body.substr(8));
        doc.columns.clear();
        for (std::string c; cs >> c;) doc.columns.push_back(c);
        if (doc.columns.empty()) throw ParseError("empty columns line", lineno);
        have_columns = true;
      } else {
        doc.header.push_back(body);
      }
      continue;
    }
    if (!have_columns) throw ParseError("data before the columns header", lineno);
    std::vector<double> row;
    const char* p = t.data();
    const char* end = t.data() + t.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      double v = 0.0;
      auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc() || (res.ptr < end && *res.ptr != ' ' && *res.ptr != '\t')) {
        throw ParseError("malformed number", lineno);
      }
      row.push_back(v);
      p = res.ptr;
    }
    if (row.size() != doc.columns.size()) {
      std::ostringstream os;
      os << "expected " << doc.columns.size() << " values, found " << row.size();
      throw ParseError(os.str(), lineno);
    }
    doc.rows.push_back(std::move(row));
  }
  if (!have_columns) throw ParseError("missing columns header", lineno);
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse(in);
}

FlowField1D to_field_1d(const Document& doc) {
  const int ix = doc.column("x"), ih = doc.column("h");
  if (ix < 0 || ih < 0) throw ParseError("1D data needs x and h columns", 0);
  const int iu = doc.column("u"), iz = doc.column("z"), iq = doc.column("q");
  FlowField1D f;
  for (const auto& r : doc.rows) {
    f.x.push_back(r[ix]);
    f.h.push_back(r[ih]);
    const double u = iu >= 0 ? r[iu] : 0.0;
    f.u.push_back(u);
    f.z.push_back(iz >= 0 ? r[iz] : 0.0);
    f.q.push_back(iq >= 0 ? r[iq] : r[ih] * u);
  }
  return f;
}

FlowField2D to_field_2d(const Document& doc) {
  const int ix = doc.column("x"), iy = doc.column("y"), ih = doc.column("h");
  if (ix < 0 || iy < 0 || ih < 0) throw ParseError("2D data needs x, y and h columns", 0);
  const int iu = doc.column("u"), iv = doc.column("v"), iz = doc.column("z");
  FlowField2D f;
  for (const auto& r : doc.rows) {
    f.x.push_back(r[ix]);
    f.y.push_back(r[iy]);
    f.h.push_back(r[ih]);
    f.u.push_back(iu >= 0 ? r[iu] : 0.0);
    f.v.push_back(iv >= 0 ? r[iv] : 0.0);
    f.z.push_back(iz >= 0 ? r[iz] : 0.0);
  }
  std::size_t nx = 0;
  while (nx < f.y.size() && f.y[nx] == f.y[0]) ++nx;
  f.nx = nx;
  f.ny = nx ? f.y.size() / nx : 0;
  if (nx == 0 || f.nx * f.ny != f.size()) throw ParseError("2D data is not a full raster", 0);
  return f;
}

}  // namespace swb::ascii
