#include "minkarr/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace minkarr::io {

using nlohmann::json;

nlohmann::json arrangement_to_json(const arrangement::MuArrangement& arr) {
    json disks = json::array();
    for (const auto& d : arr.disks)
        disks.push_back({{"x", d.center.x()}, {"y", d.center.y()}, {"r", d.radius}});
    return json{{"mu", arr.mu}, {"disks", disks}};
}

namespace {

double require_number(const json& j, const std::string& context) {
    if (!j.is_number()) throw ParseError(context + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(context + ": non-finite number");
    return v;
}

}  // namespace

arrangement::MuArrangement arrangement_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("arrangement: expected a JSON object");
    if (!j.contains("mu")) throw ParseError("arrangement: missing field mu");
    if (!j.contains("disks")) throw ParseError("arrangement: missing field disks");
    arrangement::MuArrangement arr;
    arr.mu = require_number(j.at("mu"), "mu");
    const auto& disks = j.at("disks");
    if (!disks.is_array()) throw ParseError("disks: expected an array");
    for (std::size_t k = 0; k < disks.size(); ++k) {
        const std::string ctx = "disks[" + std::to_string(k) + "]";
        const auto& entry = disks[k];
        if (!entry.is_object()) throw ParseError(ctx + ": expected an object");
        for (const char* field : {"x", "y", "r"})
            if (!entry.contains(field))
                throw ParseError(ctx + ": missing field " + std::string(field));
        geometry::Disk d;
        d.center.x() = require_number(entry.at("x"), ctx + ".x");
        d.center.y() = require_number(entry.at("y"), ctx + ".y");
        d.radius = require_number(entry.at("r"), ctx + ".r");
        if (!(d.radius > 0.0)) throw ParseError(ctx + ".r: radius must be positive");
        arr.disks.push_back(d);
    }
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

arrangement::MuArrangement load_arrangement(const std::string& path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return arrangement_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_arrangement(const arrangement::MuArrangement& arr, const std::string& path) {
    emit_json(arrangement_to_json(arr), path);
}

std::string file_digest(const std::string& path) {
    const std::string bytes = read_file(path);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << hash;
    return os.str();
}

nlohmann::json base_report(const std::string& command, const std::string& input_path) {
    json report{{"command", command}, {"version", version}};
    if (!input_path.empty()) report["input_digest"] = file_digest(input_path);
    return report;
}

void emit_json(const nlohmann::json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

}  // namespace minkarr::io
