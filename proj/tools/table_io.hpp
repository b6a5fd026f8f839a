#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngmzi/explorer.hpp"

namespace ngmzi::io {

/// Round-trip-exact, locale-independent double formatting; identical flags
/// always produce identical bytes.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char* csv_header() {
    return "m,n,r,tau,phi,dx,dp,p_ng,parity,dparity,delta_phi,delta_phi_svs,d_ng,pxd,flags";
}

inline std::string to_csv(const std::vector<Record>& records) {
    std::string out = csv_header();
    out += '\n';
    for (const Record& r : records) {
        out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',';
        out += fmt(r.r) + ',' + fmt(r.tau) + ',' + fmt(r.phi) + ',';
        out += fmt(r.dx) + ',' + fmt(r.dp) + ',' + fmt(r.p_ng) + ',';
        out += fmt(r.parity) + ',' + fmt(r.dparity) + ',' + fmt(r.delta_phi) + ',';
        out += fmt(r.delta_phi_svs) + ',' + fmt(r.d_ng) + ',' + fmt(r.pxd) + ',';
        out += r.flags;
        out += '\n';
    }
    return out;
}

inline nlohmann::json record_to_json(const Record& r) {
    return nlohmann::json{{"m", r.m},
                          {"n", r.n},
                          {"r", r.r},
                          {"tau", r.tau},
                          {"phi", r.phi},
                          {"dx", r.dx},
                          {"dp", r.dp},
                          {"p_ng", r.p_ng},
                          {"parity", r.parity},
                          {"dparity", r.dparity},
                          {"delta_phi", r.delta_phi},
                          {"delta_phi_svs", r.delta_phi_svs},
                          {"d_ng", r.d_ng},
                          {"pxd", r.pxd},
                          {"flags", r.flags}};
}

inline std::string to_json(const std::vector<Record>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Record& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a half-written table.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace ngmzi::io
