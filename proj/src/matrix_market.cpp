// Copyright 2026 The hhsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hhsolve/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hhsolve/errors.hpp"

namespace hhsolve::io {
namespace {

struct Token {
  std::string text;
  std::size_t line;
};

// Line-oriented reader that skips '%' comments and blank lines.
class DataLines {
 public:
  explicit DataLines(std::istream& in) : in_(in) {}

  // Next non-comment, non-blank line split into tokens; false at EOF.
  bool next(std::vector<Token>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '%') continue;
      tokens.clear();
      std::istringstream words(text);
      std::string w;
      while (words >> w) tokens.push_back({w, line_});
      return true;
    }
    return false;
  }

  // Raw first line, for the Matrix Market banner.
  bool header(std::string& text) {
    if (!std::getline(in_, text)) return false;
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    return true;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

// Flattens the remaining data lines into a token stream.
class TokenStream {
 public:
  explicit TokenStream(DataLines& lines) : lines_(lines) {}

  bool next(Token& tok) {
    while (pos_ >= buf_.size()) {
      if (!lines_.next(buf_)) return false;
      pos_ = 0;
    }
    tok = buf_[pos_++];
    return true;
  }

 private:
  DataLines& lines_;
  std::vector<Token> buf_;
  std::size_t pos_ = 0;
};

double parse_value(const Token& tok) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(tok.line, "expected a number, got '" + tok.text + "'");
  }
  if (!std::isfinite(v)) {
    throw NonFiniteValue(tok.line);
  }
  return v;
}

std::size_t parse_count(const Token& tok, bool allow_zero = false) {
  const bool digits = !tok.text.empty() &&
                      std::all_of(tok.text.begin(), tok.text.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
  if (!digits) {
    throw ParseError(tok.line, "expected a non-negative integer, got '" +
                                   tok.text + "'");
  }
  errno = 0;
  const unsigned long long v = std::strtoull(tok.text.c_str(), nullptr, 10);
  if (errno == ERANGE || (v == 0 && !allow_zero)) {
    throw ParseError(tok.line, "invalid size '" + tok.text + "'");
  }
  return static_cast<std::size_t>(v);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

enum class Layout { Array, Coordinate };

Layout parse_banner(const std::string& text) {
  std::istringstream words(text);
  std::string banner, object, format, field, symmetry, extra;
  words >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") {
    throw ParseError(1, "missing %%MatrixMarket banner");
  }
  if (symmetry.empty() || (words >> extra)) {
    throw ParseError(1, "malformed %%MatrixMarket banner");
  }
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix" || (format != "array" && format != "coordinate") ||
      (field != "real" && field != "integer") || symmetry != "general") {
    throw HeaderUnsupported(text);
  }
  return format == "array" ? Layout::Array : Layout::Coordinate;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void put_double(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf << '\n';
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
  DataLines lines(in);
  std::string banner;
  if (!lines.header(banner)) throw ParseError(0, "empty matrix file");
  const Layout layout = parse_banner(banner);

  std::vector<Token> size;
  if (!lines.next(size)) throw ParseError(lines.line(), "missing size line");
  const std::size_t expect = layout == Layout::Array ? 2 : 3;
  if (size.size() != expect) {
    throw ParseError(size.front().line, "size line needs " +
                                            std::to_string(expect) + " fields");
  }
  const std::size_t rows = parse_count(size[0]);
  const std::size_t cols = parse_count(size[1]);
  DenseMatrix m(rows, cols);

  if (layout == Layout::Array) {
    TokenStream tokens(lines);
    Token tok;
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) {
        if (!tokens.next(tok)) {
          throw ParseError(lines.line(), "expected " + std::to_string(rows * cols) +
                                             " values, file ended early");
        }
        m(i, j) = parse_value(tok);
      }
    }
    if (tokens.next(tok)) throw ParseError(tok.line, "unexpected trailing data");
    return m;
  }

  const std::size_t nnz = parse_count(size[2], /*allow_zero=*/true);
  std::vector<Token> entry;
  for (std::size_t e = 0; e < nnz; ++e) {
    if (!lines.next(entry)) {
      throw ParseError(lines.line(), "expected " + std::to_string(nnz) +
                                         " entries, file ended early");
    }
    if (entry.size() != 3) {
      throw ParseError(entry.front().line, "coordinate entry needs 3 fields");
    }
    const std::size_t i = parse_count(entry[0]);
    const std::size_t j = parse_count(entry[1]);
    if (i > rows || j > cols) {
      throw ParseError(entry[0].line, "entry index out of range");
    }
    m(i - 1, j - 1) += parse_value(entry[2]);
  }
  if (lines.next(entry)) throw ParseError(entry.front().line, "unexpected trailing data");
  return m;
}

DenseMatrix read_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_matrix(in);
}

DenseVector read_vector(std::istream& in) {
  DataLines lines(in);
  TokenStream tokens(lines);
  Token tok;
  if (!tokens.next(tok)) throw ParseError(0, "empty vector file");
  const std::size_t n = parse_count(tok);
  DenseVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!tokens.next(tok)) {
      throw ParseError(lines.line(), "expected " + std::to_string(n) +
                                         " values, file ended early");
    }
    v[i] = parse_value(tok);
  }
  if (tokens.next(tok)) throw ParseError(tok.line, "unexpected trailing data");
  return v;
}

DenseVector read_vector(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_vector(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << "%%MatrixMarket matrix array real general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) put_double(out, m(i, j));
  }
}

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m) {
  auto out = open_out(path);
  write_matrix(out, m);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_vector(std::ostream& out, const DenseVector& v) {
  out << v.size() << '\n';
  for (double x : v) put_double(out, x);
}

void write_vector(const std::filesystem::path& path, const DenseVector& v) {
  auto out = open_out(path);
  write_vector(out, v);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace hhsolve::io
