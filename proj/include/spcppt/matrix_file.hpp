#pragma once

// Matrix interchange format: a JSON object with fields k, m, re, im, where re
// and im are (km) x (km) row-major arrays of real numbers.

#include <string>
#include <string_view>

#include "spcppt/bipartite.hpp"

namespace spcppt {

struct MatrixFile {
    int k = 0;
    int m = 0;
    RealMatrix re;
    RealMatrix im;

    BipartiteOperator to_operator() const;
    static MatrixFile from_operator(const BipartiteOperator& a);
};

/// Throws ParseError with a message naming the offending field.
MatrixFile parse_matrix_file(std::string_view text);

/// Reads and parses a file. Unreadable files raise ParseError too.
MatrixFile read_matrix_file(const std::string& path);

/// Canonical text. parse then write reproduces canonical input byte for byte.
std::string write_matrix_file(const MatrixFile& file);

}  // namespace spcppt
