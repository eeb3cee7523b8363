#include "lpbk/report_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpbk {

JsonValue JsonValue::make_null() { return {}; }
JsonValue JsonValue::boolean_v(bool v) {
    JsonValue j;
    j.kind = Kind::boolean;
    j.b = v;
    return j;
}
JsonValue JsonValue::number_v(double v) {
    JsonValue j;
    j.kind = Kind::number;
    j.num = v;
    return j;
}
JsonValue JsonValue::string_v(std::string v) {
    JsonValue j;
    j.kind = Kind::string;
    j.str = std::move(v);
    return j;
}
JsonValue JsonValue::array_v() {
    JsonValue j;
    j.kind = Kind::array;
    return j;
}
JsonValue JsonValue::object_v() {
    JsonValue j;
    j.kind = Kind::object;
    return j;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_escaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    os << buf;
                } else {
                    os << ch;
                }
        }
    }
    os << '"';
}

void indent_to(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i) os << "  ";
}

}  // namespace

void write_json(std::ostream& os, const JsonValue& v, int indent) {
    switch (v.kind) {
        case JsonValue::Kind::null: os << "null"; return;
        case JsonValue::Kind::boolean: os << (v.b ? "true" : "false"); return;
        case JsonValue::Kind::number: os << format_double(v.num); return;
        case JsonValue::Kind::string: write_escaped(os, v.str); return;
        case JsonValue::Kind::array: {
            if (v.arr.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < v.arr.size(); ++i) {
                indent_to(os, indent + 1);
                write_json(os, v.arr[i], indent + 1);
                os << (i + 1 < v.arr.size() ? ",\n" : "\n");
            }
            indent_to(os, indent);
            os << ']';
            return;
        }
        case JsonValue::Kind::object: {
            if (v.obj.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            std::size_t i = 0;
            for (const auto& [k, val] : v.obj) {
                indent_to(os, indent + 1);
                write_escaped(os, k);
                os << ": ";
                write_json(os, val, indent + 1);
                os << (++i < v.obj.size() ? ",\n" : "\n");
            }
            indent_to(os, indent);
            os << '}';
            return;
        }
    }
}

std::string json_to_string(const JsonValue& v) {
    std::ostringstream os;
    write_json(os, v, 0);
    os << '\n';
    return os.str();
}

JsonValue report_to_json(const ExperimentReport& rep) {
    JsonValue j = JsonValue::object_v();
    j.obj["check"] = JsonValue::string_v(rep.check);
    JsonValue prm = JsonValue::object_v();
    for (const auto& [k, v] : rep.params) prm.obj[k] = JsonValue::number_v(v);
    j.obj["params"] = std::move(prm);
    JsonValue inst = JsonValue::array_v();
    for (const auto& in : rep.instances) {
        JsonValue e = JsonValue::object_v();
        e.obj["lhs"] = JsonValue::number_v(in.lhs);
        e.obj["rhs"] = JsonValue::number_v(in.rhs);
        e.obj["ratio"] = JsonValue::number_v(in.ratio);
        inst.arr.push_back(std::move(e));
    }
    j.obj["instances"] = std::move(inst);
    j.obj["min_ratio"] = JsonValue::number_v(rep.min_ratio);
    j.obj["max_ratio"] = JsonValue::number_v(rep.max_ratio);
    j.obj["mean_ratio"] = JsonValue::number_v(rep.mean_ratio);
    j.obj["constant"] = JsonValue::number_v(rep.constant);
    j.obj["tolerance"] = JsonValue::number_v(rep.tolerance);
    j.obj["pass"] = JsonValue::boolean_v(rep.pass);
    return j;
}

JsonValue norm_report_to_json(const NormReport& rep, const GridSpec& g) {
    JsonValue j = JsonValue::object_v();
    j.obj["space"] = JsonValue::string_v(to_string(rep.params.kind));
    j.obj["s"] = JsonValue::number_v(rep.params.s);
    j.obj["p"] = JsonValue::number_v(rep.params.p);
    j.obj["q"] = JsonValue::number_v(rep.params.q);
    j.obj["j_split"] = JsonValue::number_v(rep.params.j_split);
    j.obj["dim"] = JsonValue::number_v(g.dim);
    j.obj["n"] = JsonValue::number_v(g.n);
    j.obj["box"] = JsonValue::number_v(g.box);
    JsonValue bands = JsonValue::array_v();
    for (const auto& [jj, v] : rep.per_band) {
        JsonValue e = JsonValue::object_v();
        e.obj["j"] = JsonValue::number_v(jj);
        e.obj["term"] = JsonValue::number_v(v);
        bands.arr.push_back(std::move(e));
    }
    j.obj["bands"] = std::move(bands);
    j.obj["low_term"] = JsonValue::number_v(rep.low_term);
    j.obj["norm"] = JsonValue::number_v(rep.aggregate);
    return j;
}

namespace {

constexpr char kMagic[4] = {'L', 'P', 'B', 'K'};

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("field file truncated");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("field file truncated");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void write_field_raw(const SampledField& f, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os.write(kMagic, 4);
        put_u32(os, static_cast<std::uint32_t>(f.grid.dim));
        put_u32(os, static_cast<std::uint32_t>(f.grid.n));
        put_u32(os, 0);
        for (const cplx& v : f.values) {
            put_f64(os, v.real());
            put_f64(os, v.imag());
        }
        if (!os) throw std::runtime_error("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

SampledField read_field_raw(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error(path + ": not a field file");
    GridSpec g;
    g.dim = static_cast<int>(get_u32(is));
    g.n = static_cast<int>(get_u32(is));
    get_u32(is);  // reserved
    g.validate();
    SampledField f = make_field(g);
    for (cplx& v : f.values) {
        const double re = get_f64(is);
        const double im = get_f64(is);
        v = cplx{re, im};
    }
    return f;
}

void write_field_csv(const SampledField& f, std::ostream& os) {
    const GridSpec& g = f.grid;
    os << (g.dim == 1 ? "i0,re,im\n" : "i0,i1,re,im\n");
    char buf[96];
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (g.dim == 1) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, f.values[i].real(),
                          f.values[i].imag());
        } else {
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", g.axis_index(i, 0),
                          g.axis_index(i, 1), f.values[i].real(), f.values[i].imag());
        }
        os << buf;
    }
}

SampledField read_field_csv(const GridSpec& g, std::istream& is) {
    g.validate();
    SampledField f = make_field(g);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty csv field");
    std::size_t filled = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> cols;
        while (std::getline(ls, cell, ',')) cols.push_back(std::stod(cell));
        const std::size_t want = g.dim == 1 ? 3 : 4;
        if (cols.size() != want) throw std::runtime_error("bad csv row: " + line);
        std::size_t flat;
        if (g.dim == 1) {
            flat = static_cast<std::size_t>(cols[0]);
        } else {
            flat = g.flat(static_cast<int>(cols[0]), static_cast<int>(cols[1]));
        }
        if (flat >= f.values.size()) throw std::runtime_error("csv index out of range");
        f.values[flat] = cplx{cols[g.dim == 1 ? 1u : 2u], cols[g.dim == 1 ? 2u : 3u]};
        ++filled;
    }
    if (filled != f.values.size()) throw std::runtime_error("csv field has missing samples");
    return f;
}

void atomic_write_text(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!os) throw std::runtime_error("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

}  // namespace lpbk
