// report.hpp — machine-readable verification reports (one JSON line each).

#pragma once

#include <map>
#include <string>

#include "ellsym2/precision.hpp"

namespace ellsym2 {

struct VerificationReport {
    std::string check_id;
    std::string lhs;
    std::string rhs;
    std::string abs_err;
    long digits_agreed = 0;
    std::map<std::string, std::string> params;
    long runtime_ms = 0;
    std::string status; // pass | fail | inconclusive

    // Builds the report from the two side values.  status is "pass" iff
    // |lhs - rhs| <= tolerance; digits_agreed = floor(-log10(abs_err / max(|lhs|,1))).
    static VerificationReport make(const std::string& check_id, const Real& lhs,
                                   const Real& rhs, const Real& tolerance,
                                   std::map<std::string, std::string> params,
                                   long runtime_ms, int print_digits);

    std::string to_json() const;
    std::string to_text() const;
    bool passed() const { return status == "pass"; }
};

} // namespace ellsym2
