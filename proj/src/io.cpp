#include "toeplitz/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toeplitz {

namespace {

using nlohmann::json;

GaussianRational scalar_of(const json& v, const std::string& where) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number()) return parse_scalar(v.dump());
    throw ValidationError(where + ": expected a scalar string");
}

std::vector<GaussianRational> list_of(const json& obj, const char* key) {
    std::vector<GaussianRational> out;
    if (!obj.contains(key)) return out;
    const auto& arr = obj.at(key);
    if (!arr.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(scalar_of(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

template <class T>
std::string terms_json_impl(const ThResult<T>& r) {
    json out = json::array();
    for (const auto& t : r.terms) {
        json s = json::array(), tt = json::array();
        for (auto p : t.S) s.push_back(p + 1);
        for (auto p : t.T) tt.push_back(p + 1);
        out.push_back({{"S", s}, {"T", tt}, {"value", to_string(t.value)}});
    }
    return out.dump(2);
}

}  // namespace

SymbolInput parse_symbol_json(std::string_view text) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("symbol JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ValidationError("symbol JSON must be an object");
    const bool bc_keys = obj.contains("a") || obj.contains("b") || obj.contains("c") || obj.contains("d");
    const bool day_keys = obj.contains("c0") || obj.contains("r") || obj.contains("rho") || obj.contains("delta");
    if (bc_keys && day_keys) throw ValidationError("symbol JSON mixes parameter-form and zero/pole-form keys");
    for (const auto& [key, _] : obj.items()) {
        static const char* known[] = {"a", "b", "c", "d", "c0", "r", "rho", "delta"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ValidationError("symbol JSON: unknown key \"" + key + "\"");
    }
    SymbolInput in;
    if (day_keys) {
        DayForm<GaussianRational> f;
        f.c0 = obj.contains("c0") ? scalar_of(obj.at("c0"), "c0") : GaussianRational(1);
        f.r = list_of(obj, "r");
        f.rho = list_of(obj, "rho");
        f.delta = list_of(obj, "delta");
        in.day = std::move(f);
    } else {
        in.bc = RationalSymbol<GaussianRational>{list_of(obj, "a"), list_of(obj, "b"), list_of(obj, "c"),
                                                 list_of(obj, "d")};
    }
    return in;
}

SymbolInput load_symbol(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return parse_symbol_json(source);
    std::ifstream file(source);
    if (!file) throw ValidationError("cannot open symbol file '" + source + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_symbol_json(buf.str());
}

std::string symbol_json(const RationalSymbol<GaussianRational>& s) {
    auto strings = [](const std::vector<GaussianRational>& xs) {
        json arr = json::array();
        for (const auto& x : xs) arr.push_back(to_string(x));
        return arr;
    };
    return json{{"a", strings(s.a)}, {"b", strings(s.b)}, {"c", strings(s.c)}, {"d", strings(s.d)}}.dump();
}

std::string terms_json(const ThResult<GaussianRational>& r) { return terms_json_impl(r); }

std::string terms_json(const ThResult<ComplexFloat>& r) { return terms_json_impl(r); }

}  // namespace toeplitz
