#include "fzd/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fzd {

std::string matrix_to_json(const Matrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto data = nlohmann::json::array();
    for (int i = 0; i < m.rows(); i++)
        for (int k = 0; k < m.cols(); k++)
            data.push_back({m(i, k).real(), m(i, k).imag()});
    j["data"] = std::move(data);
    return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix json: expected keys rows, cols, data");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const auto& data = j["data"];
    if (rows < 0 || cols < 0 || !data.is_array() ||
        data.size() != size_t(rows) * size_t(cols))
        throw ParseError("matrix json: data length does not match rows*cols");
    Matrix m(rows, cols);
    size_t idx = 0;
    for (int i = 0; i < rows; i++)
        for (int k = 0; k < cols; k++, idx++) {
            const auto& pair = data[idx];
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("matrix json: entries must be [re, im] pairs");
            m(i, k) = cx(pair[0].get<double>(), pair[1].get<double>());
        }
    return m;
}

void save_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << matrix_to_json(m) << '\n';
}

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return matrix_from_json(ss.str());
}

}  // namespace fzd
