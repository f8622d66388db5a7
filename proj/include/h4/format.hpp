#pragma once

#include <string>
#include <vector>

namespace h4 {

/// Fixed deterministic float formatting: 17 significant digits via %.17g
/// (never shortest-roundtrip), C locale. NaN prints as "nan".
std::string fmt_g17(double v);

/// Flat ordered JSON object builder; numbers go through fmt_g17 so output is
/// byte-stable across runs.
class JsonObject {
public:
    JsonObject& add(const std::string& key, double v);
    JsonObject& add(const std::string& key, long long v);
    JsonObject& add(const std::string& key, const std::string& v);
    JsonObject& add(const std::string& key, const char* v);
    JsonObject& add_array(const std::string& key, const std::vector<double>& vs);
    JsonObject& add_raw(const std::string& key, const std::string& json);
    std::string str() const;

private:
    void sep();
    std::string body_;
};

std::string csv_join(const std::vector<std::string>& cells);

} // namespace h4
