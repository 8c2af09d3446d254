// report.cpp

#include "ellsym2/report.hpp"

#include <json.hpp>

namespace ellsym2 {

VerificationReport VerificationReport::make(const std::string& check_id, const Real& lhs,
                                            const Real& rhs, const Real& tolerance,
                                            std::map<std::string, std::string> params,
                                            long runtime_ms, int print_digits) {
    VerificationReport r;
    r.check_id = check_id;
    r.lhs = lhs.str(print_digits);
    r.rhs = rhs.str(print_digits);
    Real err = abs(lhs - rhs);
    r.abs_err = err.str(6);
    Real scale = max(abs(lhs), Real::of(1L, lhs.prec()));
    if (err.is_zero()) {
        r.digits_agreed = 999; // agreement below working precision
    } else {
        Real ratio = err / scale;
        r.digits_agreed = static_cast<long>(floor(-log(ratio) / log(Real::of(10L, lhs.prec()))).to_long());
    }
    r.params = std::move(params);
    r.runtime_ms = runtime_ms;
    r.status = (err <= tolerance) ? "pass" : "fail";
    return r;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["check_id"] = check_id;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["abs_err"] = abs_err;
    j["digits_agreed"] = digits_agreed;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["runtime_ms"] = runtime_ms;
    j["status"] = status;
    return j.dump();
}

std::string VerificationReport::to_text() const {
    std::string out = "[" + status + "] " + check_id + ": lhs=" + lhs + " rhs=" + rhs +
                      " abs_err=" + abs_err + " digits=" + std::to_string(digits_agreed) +
                      " (" + std::to_string(runtime_ms) + " ms)";
    return out;
}

} // namespace ellsym2
