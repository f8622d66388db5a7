#include "h4/format.hpp"

#include <cmath>
#include <cstdio>

namespace h4 {

std::string fmt_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

void JsonObject::sep() {
    if (!body_.empty()) body_ += ",";
}

JsonObject& JsonObject::add(const std::string& key, double v) {
    sep();
    // JSON has no nan literal; keep the record parseable.
    body_ += quote(key) + ":" + (std::isfinite(v) ? fmt_g17(v) : quote(fmt_g17(v)));
    return *this;
}

JsonObject& JsonObject::add(const std::string& key, long long v) {
    sep();
    body_ += quote(key) + ":" + std::to_string(v);
    return *this;
}

JsonObject& JsonObject::add(const std::string& key, const std::string& v) {
    sep();
    body_ += quote(key) + ":" + quote(v);
    return *this;
}

JsonObject& JsonObject::add(const std::string& key, const char* v) {
    return add(key, std::string(v));
}

JsonObject& JsonObject::add_array(const std::string& key, const std::vector<double>& vs) {
    sep();
    body_ += quote(key) + ":[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) body_ += ",";
        body_ += std::isfinite(vs[i]) ? fmt_g17(vs[i]) : quote(fmt_g17(vs[i]));
    }
    body_ += "]";
    return *this;
}

JsonObject& JsonObject::add_raw(const std::string& key, const std::string& json) {
    sep();
    body_ += quote(key) + ":" + json;
    return *this;
}

std::string JsonObject::str() const { return "{" + body_ + "}"; }

std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += cells[i];
    }
    return out;
}

} // namespace h4
