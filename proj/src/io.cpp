#include "ghx/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ghx/errors.hpp"

namespace ghx {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return out;
}

/// Accepts "a", "bi", "a+bi", "a-bi" and signed variants; "i" alone stands
/// for a unit imaginary part.
Complex parse_complex(const Token& tok, int line) {
  const std::string& s = tok.text;
  const char* p = s.c_str();
  char* end = nullptr;

  auto fail = [&](const char* what) -> Complex {
    throw ParseError(std::string("bad complex literal \"") + s + "\": " + what, line, tok.column);
  };

  auto read_number = [&](const char*& cur, double& out) -> bool {
    // Bare "i" with an optional sign counts as 1.
    const char* q = cur;
    double sign = 1.0;
    if (*q == '+' || *q == '-') {
      if (*q == '-') sign = -1.0;
      ++q;
    }
    if (*q == 'i') {
      out = sign;
      cur = q;
      return true;
    }
    out = std::strtod(cur, &end);
    if (end == cur) return false;
    cur = end;
    return true;
  };

  double first = 0.0;
  const char* cur = p;
  if (!read_number(cur, first)) return fail("expected a number");
  if (*cur == '\0') return Complex(first, 0.0);
  if (*cur == 'i') {
    if (cur[1] != '\0') fail("trailing characters after i");
    return Complex(0.0, first);
  }
  if (*cur != '+' && *cur != '-') return fail("expected +, - or i");
  double second = 0.0;
  if (!read_number(cur, second)) return fail("expected the imaginary part");
  if (*cur != 'i' || cur[1] != '\0') return fail("imaginary part must end in i");
  return Complex(first, second);
}

}  // namespace

HermitianForm parse_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!split_tokens(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty input, expected a dimension line", 1, 1);
  const std::vector<Token> head = split_tokens(line);
  if (head.size() != 1) throw ParseError("dimension line must hold a single integer", lineno,
                                         head.size() > 1 ? head[1].column : 1);
  char* end = nullptr;
  const long n = std::strtol(head[0].text.c_str(), &end, 10);
  if (*end != '\0' || n < 1 || n > kMaxDim)
    throw ParseError("dimension must be an integer in [1, " + std::to_string(kMaxDim) + "]",
                     lineno, head[0].column);

  Eigen::MatrixXcd M(n, n);
  auto toks = std::vector<std::vector<Token>>(std::size_t(n));
  std::vector<int> lines(std::size_t(n), 0);
  for (long r = 0; r < n; ++r) {
    if (!next_line())
      throw ParseError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(r),
                       lineno + 1, 1);
    toks[std::size_t(r)] = split_tokens(line);
    lines[std::size_t(r)] = lineno;
    if (long(toks[std::size_t(r)].size()) != n)
      throw ParseError("row has " + std::to_string(toks[std::size_t(r)].size()) +
                           " entries, expected " + std::to_string(n),
                       lineno, 1);
    for (long c = 0; c < n; ++c)
      M(r, c) = parse_complex(toks[std::size_t(r)][std::size_t(c)], lineno);
  }

  for (long r = 0; r < n; ++r) {
    const double im = std::abs(M(r, r).imag());
    if (im > 1e-12 * (std::abs(M(r, r).real()) + 1.0))
      throw ParseError("diagonal entry must be real", lines[std::size_t(r)],
                       toks[std::size_t(r)][std::size_t(r)].column);
    for (long c = 0; c < r; ++c) {
      const Complex upper = M(c, r);
      const Complex low = M(r, c);
      const double err = std::abs(low - std::conj(upper));
      if (err > 1e-12 * (std::abs(low) + std::abs(upper) + 1.0))
        throw ParseError("entry is not the conjugate of its transpose partner",
                         lines[std::size_t(r)], toks[std::size_t(r)][std::size_t(c)].column);
    }
  }
  return HermitianForm::hermitized(M);
}

HermitianForm parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

HermitianForm parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  return parse_matrix(in);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix(const HermitianForm& A) {
  std::ostringstream out;
  const int n = A.dim();
  out << n << "\n";
  char buf[160];
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Complex v = A.at(r, c);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
      out << buf << (c + 1 < n ? " " : "\n");
    }
  }
  return out.str();
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  const std::string pad_in(std::size_t(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    case Json::value_t::string:
      out += Json(j.get<std::string>()).dump();
      break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump_rec(j[i], out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      break;
    }
    default:
      out += "null";
      break;
  }
}

}  // namespace

std::string dump_json17(const Json& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error("failed writing file: " + path);
}

}  // namespace ghx
