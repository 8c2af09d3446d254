// precision.cpp — string formatting for Real.

#include "ellsym2/precision.hpp"

#include <cstring>
#include <vector>

namespace ellsym2 {

std::string Real::str(int ndigits) const {
    if (ndigits < 1) ndigits = 1;
    if (!mpfr_number_p(v_)) {
        if (mpfr_nan_p(v_)) return "nan";
        return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    }
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, ndigits, v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr convention: value = 0.digits * 10^e
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    long dec_exp = static_cast<long>(e) - 1;
    if (dec_exp != 0) out += "e" + std::to_string(dec_exp);
    return out;
}

} // namespace ellsym2
