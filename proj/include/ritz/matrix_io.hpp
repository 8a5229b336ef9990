#pragma once

#include <iosfwd>
#include <string>

#include "ritz/types.hpp"

namespace ritz {

// Text format, locale independent:
//   line 1:  "<rows> <cols> <kind>"  with kind in {real, complex}
//   then one line per row, entries separated by spaces.
// Complex entries are written as a+bi / a-bi with no interior spaces,
// e.g. 1.5-0.25i.  Real files hold plain decimal doubles.

struct LoadedMatrix {
  Matrix mat;
  MatrixKind kind;
};

LoadedMatrix read_matrix(const std::string& path);
LoadedMatrix read_matrix(std::istream& in, const std::string& name);

void write_matrix(const std::string& path, const Matrix& m, MatrixKind kind);
void write_matrix(std::ostream& out, const Matrix& m, MatrixKind kind);

// real when every entry has zero imaginary part
MatrixKind detect_kind(const Matrix& m);

// Shortest decimal that round-trips to the same double; uses '.' regardless
// of locale.
std::string format_double(double x);
std::string format_complex(const Complex& z);

double parse_double(const std::string& s, const std::string& what);
Complex parse_entry(const std::string& s, MatrixKind kind, const std::string& what);

}  // namespace ritz
