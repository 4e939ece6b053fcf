#pragma once

#include <string>

#include "mpcalc/errors.hpp"

namespace mpcalc {

/// Exact arithmetic in the group of fourth roots of unity {1, i, -1, -i}.
/// Root numbers of self-dual constituents live here; every product the
/// library forms out of them is asserted to land in {+-1} at the use site.
class Mu4 {
public:
    Mu4() : k_(0) {}

    static Mu4 one() { return Mu4(0); }
    static Mu4 i() { return Mu4(1); }
    static Mu4 minus_one() { return Mu4(2); }
    static Mu4 minus_i() { return Mu4(3); }

    static Mu4 of_sign(int s) {
        if (s == 1) return one();
        if (s == -1) return minus_one();
        fail(ErrorKind::Schema, "sign must be 1 or -1, got " + std::to_string(s));
    }

    static Mu4 parse(const std::string& s) {
        if (s == "1") return one();
        if (s == "i") return i();
        if (s == "-1") return minus_one();
        if (s == "-i") return minus_i();
        fail(ErrorKind::Schema, "mu4 value must be one of \"1\",\"-1\",\"i\",\"-i\", got \"" + s + "\"");
    }

    Mu4 operator*(Mu4 other) const { return Mu4((k_ + other.k_) & 3); }
    Mu4& operator*=(Mu4 other) { k_ = (k_ + other.k_) & 3; return *this; }
    Mu4 inverse() const { return Mu4((4 - k_) & 3); }

    Mu4 pow(long long e) const {
        long long r = (static_cast<long long>(k_) * e) % 4;
        if (r < 0) r += 4;
        return Mu4(static_cast<int>(r));
    }

    Mu4 square() const { return pow(2); }

    bool operator==(Mu4 other) const { return k_ == other.k_; }
    bool operator!=(Mu4 other) const { return k_ != other.k_; }

    bool is_real() const { return (k_ & 1) == 0; }

    /// Coerce to {+1,-1}; NonRealProduct if the value is +-i.
    int sign(const std::string& context) const {
        if (k_ == 0) return 1;
        if (k_ == 2) return -1;
        fail(ErrorKind::NonRealProduct, context + ": mu4 product " + str() + " is not a sign");
    }

    std::string str() const {
        switch (k_) {
            case 0: return "1";
            case 1: return "i";
            case 2: return "-1";
            default: return "-i";
        }
    }

private:
    explicit Mu4(int k) : k_(k) {}
    int k_; // value = i^k
};

inline int parse_sign(int v, const std::string& context) {
    if (v != 1 && v != -1)
        fail(ErrorKind::Schema, context + ": sign must be 1 or -1, got " + std::to_string(v));
    return v;
}

} // namespace mpcalc
