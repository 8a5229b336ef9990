#include "ritz/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace ritz {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(const Complex& z) {
  std::string s = format_double(z.real());
  s += std::signbit(z.imag()) ? '-' : '+';
  s += format_double(std::abs(z.imag()));
  s += 'i';
  return s;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw Error("malformed entry at " + what + ": '" + s + "'");
  if (!std::isfinite(v)) throw Error("non-finite entry at " + what);
  return v;
}

Complex parse_entry(const std::string& s, MatrixKind kind, const std::string& what) {
  if (s.empty()) throw Error("malformed entry at " + what);
  if (s.back() == 'i') {
    if (kind == MatrixKind::real) throw Error("complex entry in real matrix at " + what);
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the sign that separates real and imaginary parts: the last
    // '+'/'-' that is neither leading nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      const char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) throw Error("malformed entry at " + what + ": '" + s + "'");
    const double re = parse_double(body.substr(0, split), what);
    const double im_mag = parse_double(body.substr(split + 1), what);
    return Complex(re, body[split] == '-' ? -im_mag : im_mag);
  }
  return Complex(parse_double(s, what), 0.0);
}

MatrixKind detect_kind(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return MatrixKind::cplx;
  return MatrixKind::real;
}

LoadedMatrix read_matrix(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) throw Error(name + ": missing header line");
  const auto head = split_ws(line);
  if (head.size() != 3) throw Error(name + ": malformed header, want 'rows cols kind'");
  long rows = 0, cols = 0;
  try {
    rows = std::stol(head[0]);
    cols = std::stol(head[1]);
  } catch (const std::exception&) {
    throw Error(name + ": malformed dimensions");
  }
  if (rows < 1 || cols < 1) throw Error(name + ": malformed dimensions");
  MatrixKind kind;
  if (head[2] == "real")
    kind = MatrixKind::real;
  else if (head[2] == "complex")
    kind = MatrixKind::cplx;
  else
    throw Error(name + ": unknown kind '" + head[2] + "'");

  Matrix m(rows, cols);
  long r = 0;
  while (r < rows) {
    if (!std::getline(in, line)) throw Error(name + ": unexpected end of file at row " + std::to_string(r + 1));
    const auto toks = split_ws(line);
    if (toks.empty()) continue;  // tolerate blank lines
    if (static_cast<long>(toks.size()) != cols)
      throw Error(name + ": row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                  " entries, expected " + std::to_string(cols));
    for (long c = 0; c < cols; ++c) {
      const std::string where = name + ": row " + std::to_string(r + 1) + " col " + std::to_string(c + 1);
      m(r, c) = parse_entry(toks[c], kind, where);
    }
    ++r;
  }
  return LoadedMatrix{std::move(m), kind};
}

LoadedMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const Matrix& m, MatrixKind kind) {
  out << m.rows() << ' ' << m.cols() << ' ' << (kind == MatrixKind::real ? "real" : "complex") << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      if (kind == MatrixKind::real) {
        if (m(i, j).imag() != 0.0) throw Error("write_matrix: complex entry with real kind");
        out << format_double(m(i, j).real());
      } else {
        out << format_complex(m(i, j));
      }
    }
    out << '\n';
  }
}

void write_matrix(const std::string& path, const Matrix& m, MatrixKind kind) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_matrix(out, m, kind);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace ritz
