#pragma once

#include <iosfwd>
#include <string>

#include "mvd/matrix.hpp"

namespace mvd {

// Plain-text matrix format:
//
//   line 1:        "<rows> <cols>"
//   lines 2..1+rows: cols whitespace-separated entry tokens
//
// An entry token is one of
//   <re>            pure real,            e.g. "2" or "-1.5e-3"
//   <im>j           pure imaginary,       e.g. "0.5j" or "-2j"
//   <re><+|-><im>j  full form,            e.g. "1.5-0.25j"
// where <re> and <im> are C++ floating-point literals (the sign splitting the
// two parts is never the one inside an exponent). The writer always emits the
// full form with 17 significant digits, so write/parse round-trips are exact.
std::string write_matrix_text(const ComplexMatrix& m);
ComplexMatrix read_matrix_text(const std::string& text);

ComplexMatrix load_matrix_file(const std::string& path);
void save_matrix_file(const std::string& path, const ComplexMatrix& m);

// Single entry token in the grammar above.
std::string format_entry(cplx z);
cplx parse_entry(const std::string& token);

} // namespace mvd
