#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

/// Overflow-checked 64-bit helpers. Legal games cannot grow entries past the
/// initial state box, so an overflow here always signals misuse.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in chip arithmetic");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in chip arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in chip arithmetic");
    return r;
}

/// Integer vector indexed by vertices. Doubles as a chip configuration and as
/// a divisor; entries may be negative. The degree is the coordinate sum.
class ChipDistribution {
public:
    ChipDistribution() = default;
    explicit ChipDistribution(std::vector<long long> values) : v_(std::move(values)) {}

    static ChipDistribution zeros(int n) { return ChipDistribution(std::vector<long long>(n, 0)); }

    static ChipDistribution constant(int n, long long c) {
        return ChipDistribution(std::vector<long long>(n, c));
    }

    /// Characteristic vector of vertex v.
    static ChipDistribution unit(int n, int v) {
        ChipDistribution d = zeros(n);
        d.v_.at(v) = 1;
        return d;
    }

    int size() const { return static_cast<int>(v_.size()); }
    long long operator[](int i) const { return v_[i]; }
    long long& operator[](int i) { return v_[i]; }
    const std::vector<long long>& values() const { return v_; }

    long long degree() const {
        long long s = 0;
        for (long long x : v_) s = checked_add(s, x);
        return s;
    }

    bool nonnegative() const {
        for (long long x : v_)
            if (x < 0) return false;
        return true;
    }

    ChipDistribution& operator+=(const ChipDistribution& o) {
        require_same_size(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] = checked_add(v_[i], o.v_[i]);
        return *this;
    }

    ChipDistribution& operator-=(const ChipDistribution& o) {
        require_same_size(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] = checked_sub(v_[i], o.v_[i]);
        return *this;
    }

    friend ChipDistribution operator+(ChipDistribution a, const ChipDistribution& b) { return a += b; }
    friend ChipDistribution operator-(ChipDistribution a, const ChipDistribution& b) { return a -= b; }

    friend ChipDistribution operator-(const ChipDistribution& a) {
        std::vector<long long> r(a.v_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(0, a.v_[i]);
        return ChipDistribution(std::move(r));
    }

    bool operator==(const ChipDistribution&) const = default;
    auto operator<=>(const ChipDistribution&) const = default;

    /// Comma-separated values in vertex-index order, e.g. "1,0,0,3".
    std::string to_csv() const {
        std::string out;
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v_[i]);
        }
        return out;
    }

private:
    void require_same_size(const ChipDistribution& o) const {
        if (v_.size() != o.v_.size())
            throw DimensionMismatchError("chip distributions have different lengths");
    }

    std::vector<long long> v_;
};

struct ChipDistributionHash {
    size_t operator()(const ChipDistribution& d) const {
        uint64_t h = 1469598103934665603ull;
        for (long long x : d.values()) {
            h ^= static_cast<uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace chipfire
