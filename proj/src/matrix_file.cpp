#include "spcppt/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spcppt/json_format.hpp"

namespace spcppt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

int read_dim(const json& doc, const char* field) {
    if (!doc.contains(field)) fail(field, "missing");
    const json& v = doc.at(field);
    if (!v.is_number_integer()) fail(field, "expected a positive integer");
    const auto value = v.get<long long>();
    if (value < 1 || value > 4096) fail(field, "expected a positive integer");
    return static_cast<int>(value);
}

RealMatrix read_array(const json& doc, const char* field, Eigen::Index n) {
    if (!doc.contains(field)) fail(field, "missing");
    const json& rows = doc.at(field);
    if (!rows.is_array()) fail(field, "expected an array of rows");
    if (static_cast<Eigen::Index>(rows.size()) != n) {
        fail(field, "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    }
    RealMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array()) fail(field, "row " + std::to_string(i) + " is not an array");
        if (static_cast<Eigen::Index>(row.size()) != n) {
            fail(field, "row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(n));
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const json& x = row[static_cast<std::size_t>(j)];
            if (!x.is_number()) {
                fail(field, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a number");
            }
            out(i, j) = x.get<double>();
        }
    }
    return out;
}

json array_of(const RealMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

BipartiteOperator MatrixFile::to_operator() const {
    ComplexMatrix mat(re.rows(), re.cols());
    mat.real() = re;
    mat.imag() = im;
    return {k, m, std::move(mat)};
}

MatrixFile MatrixFile::from_operator(const BipartiteOperator& a) {
    return {a.k(), a.m(), a.matrix().real(), a.matrix().imag()};
}

MatrixFile parse_matrix_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("document: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document: expected a JSON object");
    MatrixFile out;
    out.k = read_dim(doc, "k");
    out.m = read_dim(doc, "m");
    const Eigen::Index n = static_cast<Eigen::Index>(out.k) * out.m;
    out.re = read_array(doc, "re", n);
    out.im = read_array(doc, "im", n);
    return out;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_file(buf.str());
}

std::string write_matrix_file(const MatrixFile& file) {
    json doc;
    doc["k"] = file.k;
    doc["m"] = file.m;
    doc["re"] = array_of(file.re);
    doc["im"] = array_of(file.im);
    return to_canonical_json(doc);
}

}  // namespace spcppt
