#pragma once

// Text format ".01m":
//
//   dims: n_1 n_2 ... n_d
//   <prod n_i characters from {0,1}, row-major, whitespace ignored>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "satmat/matrix.hpp"

namespace satmat {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Matrix01 parse_01m(const std::string& text, std::size_t max_cells = kDefaultMaxCells) {
  const auto eol = text.find('\n');
  std::string header = text.substr(0, eol);
  const std::string body = eol == std::string::npos ? std::string() : text.substr(eol + 1);

  const auto first = header.find_first_not_of(" \t\r");
  if (first == std::string::npos || header.compare(first, 5, "dims:") != 0)
    throw ParseError("missing 'dims:' header");
  std::istringstream hs(header.substr(first + 5));
  std::vector<int> extents;
  std::string tok;
  while (hs >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad extent '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > (1L << 30)) throw ParseError("bad extent '" + tok + "'");
    extents.push_back(static_cast<int>(v));
  }
  if (extents.empty()) throw ParseError("header lists no extents");

  Shape shape;
  try {
    shape = Shape(extents, max_cells);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  std::string bits;
  bits.reserve(shape.cell_count());
  for (char ch : body) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != '0' && ch != '1') throw ParseError(std::string("unexpected character '") + ch + "'");
    bits.push_back(ch);
  }
  if (bits.size() != shape.cell_count())
    throw ParseError("expected " + std::to_string(shape.cell_count()) + " cells, found " +
                     std::to_string(bits.size()));
  return Matrix01::from_bits(shape, bits);
}

/// One line per (d-1)-prefix, a blank line between (d-2)-prefix groups.
inline std::string format_01m(const Matrix01& m) {
  const Shape& s = m.shape();
  std::string out = "dims:";
  for (int n : s.extents()) out += " " + std::to_string(n);
  out += '\n';
  const std::string bits = m.bits();
  const std::size_t line = static_cast<std::size_t>(s.extent(s.dims() - 1));
  const std::size_t group = s.dims() >= 2 ? line * static_cast<std::size_t>(s.extent(s.dims() - 2))
                                          : bits.size();
  for (std::size_t at = 0; at < bits.size(); at += line) {
    if (at != 0 && at % group == 0) out += '\n';
    out.append(bits, at, line);
    out += '\n';
  }
  return out;
}

inline Matrix01 read_01m(const std::string& path, std::size_t max_cells = kDefaultMaxCells) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_01m(ss.str(), max_cells);
}

inline void write_01m(const std::string& path, const Matrix01& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_01m(m);
}

}  // namespace satmat
