#include "splitline/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace splitline::jsonio {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON payload");
    return j;
}

Complex read_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex values must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

ExtendedReal read_extended(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtendedReal::infinity();
        throw ParseError("extended real must be a number or \"inf\"");
    }
    if (!j.is_number()) throw ParseError("extended real must be a number or \"inf\"");
    return ExtendedReal{j.get<double>()};
}

C2Matrix read_matrix(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError("matrix payload must be a 2x2 nested array");
    return {read_complex(j[0][0]), read_complex(j[0][1]), read_complex(j[1][0]),
            read_complex(j[1][1])};
}

AlphaVector read_alpha(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("alpha payload must be an array of four complex values");
    return {read_complex(j[0]), read_complex(j[1]), read_complex(j[2]), read_complex(j[3])};
}

RhoPair read_rho(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("rho payload must be [rho_plus, rho_minus]");
    return {read_extended(j[0]), read_extended(j[1])};
}

}  // namespace

C2Matrix parse_matrix(const std::string& text) { return read_matrix(parse_text(text)); }

AlphaVector parse_alpha(const std::string& text) { return read_alpha(parse_text(text)); }

RhoPair parse_rho(const std::string& text) { return read_rho(parse_text(text)); }

Extension parse_extension(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object() || j.size() != 1)
        throw ParseError("extension payload must be {\"alpha\": [...]} or {\"rho\": [...]}");
    if (j.contains("alpha")) return read_alpha(j["alpha"]);
    if (j.contains("rho")) return read_rho(j["rho"]);
    throw ParseError("extension payload must be {\"alpha\": [...]} or {\"rho\": [...]}");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_complex(Complex z) {
    return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string json_matrix(const C2Matrix& m) {
    return "[[" + json_complex(m.m11) + ", " + json_complex(m.m12) + "], [" +
           json_complex(m.m21) + ", " + json_complex(m.m22) + "]]";
}

std::string json_extended(const ExtendedReal& v) {
    return v.is_infinite() ? std::string{"\"inf\""} : format_double(v.value());
}

}  // namespace splitline::jsonio
