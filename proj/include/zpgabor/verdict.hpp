#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace zpgabor {

enum class VerdictStatus {
    pass,
    fail,
    precondition,  // input violated the operation's stated preconditions
};

/// Structured decision result. Failures always carry a machine-readable
/// witness; passes may carry a certificate (cover counts, norms, ...).
struct Verdict {
    VerdictStatus status = VerdictStatus::fail;
    std::string detail;
    nlohmann::json witness;      // null on pass
    nlohmann::json certificate;  // optional evidence

    bool passed() const { return status == VerdictStatus::pass; }

    static Verdict ok(std::string detail = "", nlohmann::json certificate = nullptr) {
        Verdict v;
        v.status = VerdictStatus::pass;
        v.detail = std::move(detail);
        v.certificate = std::move(certificate);
        return v;
    }

    static Verdict failure(std::string detail, nlohmann::json witness,
                           nlohmann::json certificate = nullptr) {
        Verdict v;
        v.status = VerdictStatus::fail;
        v.detail = std::move(detail);
        v.witness = std::move(witness);
        v.certificate = std::move(certificate);
        return v;
    }

    static Verdict precondition(std::string detail, nlohmann::json witness = nullptr) {
        Verdict v;
        v.status = VerdictStatus::precondition;
        v.detail = std::move(detail);
        v.witness = std::move(witness);
        return v;
    }
};

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::precondition: return "precondition";
    }
    return "unknown";
}

}  // namespace zpgabor
