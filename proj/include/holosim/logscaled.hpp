#pragma once

#include <cmath>
#include <string>

#include "holosim/errors.hpp"

namespace holosim {

// Signed real number stored as sign * exp(ln_mag). Products, quotients and
// powers act on the exponent and never overflow; sums fall back to
// log-sum-exp. Exact zero is sign == 0 (ln_mag meaningless there).
class LogScaled {
public:
    LogScaled() = default;

    static LogScaled from_value(double v) {
        LogScaled r;
        if (v == 0.0) return r;
        r.sign_ = v > 0 ? 1 : -1;
        r.ln_mag_ = std::log(std::abs(v));
        return r;
    }

    static LogScaled from_log(double ln_mag, int sign = 1) {
        LogScaled r;
        if (sign == 0) return r;
        r.sign_ = sign > 0 ? 1 : -1;
        r.ln_mag_ = ln_mag;
        return r;
    }

    // exp(ln_mag) may round to 0 or inf outside double range; exponent-space
    // accessors below are the lossless interface.
    double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(ln_mag_); }
    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    double log_magnitude() const {
        if (sign_ == 0) throw invalid_argument_error("log of zero LogScaled");
        return ln_mag_;
    }
    double log_in_base(double base) const { return log_magnitude() / std::log(base); }
    double log2() const { return log_in_base(2.0); }

    LogScaled operator-() const { return from_log(ln_mag_, -sign_); }

    LogScaled operator*(const LogScaled& o) const {
        if (sign_ == 0 || o.sign_ == 0) return LogScaled();
        return from_log(ln_mag_ + o.ln_mag_, sign_ * o.sign_);
    }

    LogScaled operator/(const LogScaled& o) const {
        if (o.sign_ == 0) throw invalid_argument_error("division by zero LogScaled");
        if (sign_ == 0) return LogScaled();
        return from_log(ln_mag_ - o.ln_mag_, sign_ * o.sign_);
    }

    LogScaled operator+(const LogScaled& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        double hi = std::max(ln_mag_, o.ln_mag_);
        double lo = std::min(ln_mag_, o.ln_mag_);
        if (sign_ == o.sign_)
            return from_log(hi + std::log1p(std::exp(lo - hi)), sign_);
        // opposite signs: |result| = exp(hi) - exp(lo)
        if (ln_mag_ == o.ln_mag_) return LogScaled();
        int s = (ln_mag_ > o.ln_mag_) ? sign_ : o.sign_;
        return from_log(hi + std::log(-std::expm1(lo - hi)), s);
    }

    LogScaled operator-(const LogScaled& o) const { return *this + (-o); }

    // |x|^e keeping the sign; only meaningful for positive bases when e is
    // non-integral, which is the only way the budget formulas use it.
    LogScaled pow(double e) const {
        if (sign_ == 0) return LogScaled();
        if (sign_ < 0) throw invalid_argument_error("pow of negative LogScaled");
        return from_log(ln_mag_ * e, 1);
    }

    bool same_sign_less(const LogScaled& o) const {
        // ordering on the log scale, both operands strictly positive
        if (sign_ <= 0 || o.sign_ <= 0)
            throw invalid_argument_error("log comparison needs positive values");
        return ln_mag_ < o.ln_mag_;
    }

    std::string describe() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        return s + "exp(" + std::to_string(ln_mag_) + ")";
    }

private:
    double ln_mag_ = 0.0;
    int sign_ = 0;
};

inline LogScaled pow_of(double base, double exponent) {
    if (base <= 0.0) throw invalid_argument_error("pow_of needs positive base");
    return LogScaled::from_log(exponent * std::log(base), 1);
}

}  // namespace holosim
