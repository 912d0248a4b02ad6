/**
 * @file report.hpp
 * @brief Machine-readable JSON reports: deterministic field order, status in
 * {pass, fail, refused}, wall time carried in a single "millis" field so
 * reports are byte-identical across runs modulo that field.
 */
#pragma once

#include <json.hpp>

#include <iostream>
#include <string>

namespace hdlab {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, refused };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "refused";
    }
}

inline int status_exit_code(Status s) {
    switch (s) {
        case Status::pass: return 0;
        case Status::fail: return 1;
        default: return 2;
    }
}

/// JSON on stdout, one-line human summary on stderr.
inline int emit_report(const std::string& command, Status status, Json body, double millis) {
    Json rep;
    rep["command"] = command;
    rep["status"] = status_name(status);
    for (auto& [k, v] : body.items()) rep[k] = v;
    rep["millis"] = millis;
    std::cout << rep.dump(2) << std::endl;
    std::cerr << "[" << status_name(status) << "] " << command << " (" << millis << " ms)" << std::endl;
    return status_exit_code(status);
}

}  // namespace hdlab
