#pragma once
// deterministic serialization: sorted-key JSON with fixed float formatting,
// raw/CSV field files, atomic write-then-rename
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpbk/checks.hpp"
#include "lpbk/grid.hpp"
#include "lpbk/spaces.hpp"

namespace lpbk {

// minimal JSON value, enough for report emission; maps keep keys sorted so
// identical content always serializes to identical bytes
struct JsonValue {
    enum class Kind { null, boolean, number, string, array, object };
    Kind kind = Kind::null;
    bool b = false;
    double num = 0;
    std::string str;
    std::vector<JsonValue> arr;
    std::map<std::string, JsonValue> obj;

    static JsonValue make_null();
    static JsonValue boolean_v(bool v);
    static JsonValue number_v(double v);
    static JsonValue string_v(std::string v);
    static JsonValue array_v();
    static JsonValue object_v();
};

std::string format_double(double v);  // %.17g with inf/nan mapped to strings
void write_json(std::ostream& os, const JsonValue& v, int indent = 0);
std::string json_to_string(const JsonValue& v);

JsonValue report_to_json(const ExperimentReport& rep);
JsonValue norm_report_to_json(const NormReport& rep, const GridSpec& g);

// raw complex field container: 16-byte header (magic "LPBK", u32 dim, u32 n,
// u32 reserved), then little-endian f64 re/im pairs in flat index order
void write_field_raw(const SampledField& f, const std::string& path);
SampledField read_field_raw(const std::string& path);

// CSV: header row, one line per sample (indices, re, im)
void write_field_csv(const SampledField& f, std::ostream& os);
SampledField read_field_csv(const GridSpec& g, std::istream& is);

// writes to path.tmp then renames over path so partial output never lands
void atomic_write_text(const std::string& path, const std::string& content);

}  // namespace lpbk
