#pragma once

#include <string>

#include "mpcalc/errors.hpp"

namespace mpcalc {

/// Half-integer stored exactly as twice its value. Shifts of L-parameter
/// summands ("3/2", "-1", "0") are never approximated.
struct HalfInt {
    int twice = 0;

    static HalfInt whole(int k) { return HalfInt{2 * k}; }
    static HalfInt halves(int t) { return HalfInt{t}; }

    static HalfInt parse(const std::string& s) {
        if (s.empty()) fail(ErrorKind::Schema, "empty half-integer literal");
        std::size_t pos = 0;
        bool neg = false;
        if (s[pos] == '-') { neg = true; ++pos; }
        if (pos >= s.size()) fail(ErrorKind::Schema, "bad half-integer literal \"" + s + "\"");
        long long v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000) fail(ErrorKind::Schema, "half-integer literal out of range: \"" + s + "\"");
            ++pos;
        }
        int t;
        if (pos == s.size()) {
            t = static_cast<int>(2 * v);
        } else if (s.compare(pos, 2, "/2") == 0 && pos + 2 == s.size()) {
            t = static_cast<int>(v);
        } else {
            fail(ErrorKind::Schema, "bad half-integer literal \"" + s + "\" (expected forms: \"k\", \"k/2\")");
        }
        return HalfInt{neg ? -t : t};
    }

    bool is_zero() const { return twice == 0; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    bool operator==(const HalfInt& o) const { return twice == o.twice; }
    bool operator!=(const HalfInt& o) const { return twice != o.twice; }
    bool operator<(const HalfInt& o) const { return twice < o.twice; }

    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace mpcalc
