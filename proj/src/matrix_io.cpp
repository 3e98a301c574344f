#include "mvd/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mvd {

namespace {

double parse_double(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number in matrix entry");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw std::invalid_argument("malformed number '" + s + "' in matrix entry");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry '" + s + "'");
    return v;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string format_entry(cplx z) {
    std::string out = format_double(z.real());
    const std::string im = format_double(z.imag());
    if (im[0] != '-') out += '+';
    out += im;
    out += 'j';
    return out;
}

cplx parse_entry(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty matrix entry");
    std::string body = token;
    const bool has_j = body.back() == 'j';
    if (has_j) body.pop_back();
    if (body.empty()) throw std::invalid_argument("malformed matrix entry '" + token + "'");

    if (!has_j) return cplx(parse_double(body), 0.0);

    // Split at the last top-level sign (one not directly after an exponent
    // marker and not in position 0).
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return cplx(0.0, parse_double(body));
    return cplx(parse_double(body.substr(0, split)), parse_double(body.substr(split)));
}

std::string write_matrix_text(const ComplexMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_entry(m(i, j));
        }
        out += '\n';
    }
    return out;
}

ComplexMatrix read_matrix_text(const std::string& text) {
    std::istringstream in(text);
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw std::invalid_argument("missing matrix header line");
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    std::vector<cplx> entries;
    entries.reserve(static_cast<size_t>(rows) * cols);
    std::string token;
    for (long k = 0; k < static_cast<long>(rows) * cols; ++k) {
        if (!(in >> token))
            throw std::invalid_argument("matrix body ended early: expected " +
                                        std::to_string(static_cast<long>(rows) * cols) +
                                        " entries");
        entries.push_back(parse_entry(token));
    }
    if (in >> token) throw std::invalid_argument("trailing content after matrix body");
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_matrix_text(buf.str());
}

void save_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file '" + path + "'");
    out << write_matrix_text(m);
}

} // namespace mvd
