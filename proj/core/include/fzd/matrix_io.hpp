#pragma once

#include <string>

#include "fzd/matrix.hpp"

/// JSON (de)serialization of matrices. The encoding used repo-wide is
///   {"rows": r, "cols": c, "data": [[re, im], ...]}
/// with data in row-major order.

namespace fzd {

/// Input text is not a matrix in the repo encoding.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

void save_matrix(const std::string& path, const Matrix& m);
Matrix load_matrix(const std::string& path);

}  // namespace fzd
