#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cusped {

// Exact integers for all homological algebra.  cpp_int keeps small values
// inline and grows on demand, which is the "arbitrary precision past a
// machine-word threshold" behaviour we want from SNF pivoting.
using Int = boost::multiprecision::cpp_int;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Half-integer quantities (Gromov products, delta estimates) stored exactly
// as twice their value.
struct Half {
    std::int64_t twice = 0;

    Half() = default;
    static Half from_twice(std::int64_t t) { return Half{t}; }
    static Half whole(std::int64_t v) { return Half{2 * v}; }

    double value() const { return static_cast<double>(twice) / 2.0; }
    bool is_integer() const { return twice % 2 == 0; }

    friend bool operator==(Half a, Half b) { return a.twice == b.twice; }
    friend bool operator!=(Half a, Half b) { return a.twice != b.twice; }
    friend bool operator<(Half a, Half b) { return a.twice < b.twice; }
    friend bool operator<=(Half a, Half b) { return a.twice <= b.twice; }
    friend bool operator>(Half a, Half b) { return a.twice > b.twice; }
    friend bool operator>=(Half a, Half b) { return a.twice >= b.twice; }
    friend Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
    friend Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }

    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        std::int64_t a = twice < 0 ? -twice : twice;
        return std::string(twice < 0 ? "-" : "") + std::to_string(a / 2) + ".5";
    }
};

// Deterministic, platform-independent RNG (splitmix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw input_error("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace cusped
