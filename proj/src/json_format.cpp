#include "spcppt/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace spcppt {

namespace {

using nlohmann::json;

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

void emit(const json& v, int depth, std::string& out) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            // nlohmann::json keeps object keys in a std::map, so iteration is sorted.
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += json(it.key()).dump();
                out += ": ";
                emit(it.value(), depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            bool flat = true;
            for (const auto& e : v) flat = flat && is_scalar(e);
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ", ";
                    emit(v[i], depth + 1, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                emit(v[i], depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_canonical_json(const nlohmann::json& value) {
    std::string out;
    emit(value, 0, out);
    out += "\n";
    return out;
}

}  // namespace spcppt
