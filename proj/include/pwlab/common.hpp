#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pwlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct DimensionGuard : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };

/// Rational extended with a single +infinity sentinel, ordered above all
/// finite values. Used for minima over possibly empty ray sets.
class ExtRat {
  public:
    ExtRat() = default;
    ExtRat(Rat v) : value_(std::move(v)) {}
    ExtRat(long long v) : value_(v) {}
    ExtRat(int v) : value_(v) {}

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }

    const Rat& value() const {
        if (inf_) throw Error("ExtRat: value() on infinity");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  private:
    bool inf_ = false;
    Rat value_{};
};

inline std::string to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const ExtRat& r) {
    return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

/// Worker count for the parallel search loops; PWLAB_THREADS caps it.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PWLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace pwlab
