#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gapkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
// Thrown whenever a requested construction or search would exceed a configured
// size/weight budget; callers are expected to surface the message verbatim.
struct BudgetError : Error {
    using Error::Error;
};

inline uint64_t add_u64(uint64_t a, uint64_t b, const char* what = "weight") {
    uint64_t r = a + b;
    if (r < a) throw BudgetError(std::string(what) + ": sum exceeds 64-bit range");
    return r;
}

inline uint64_t mul_u64(uint64_t a, uint64_t b, const char* what = "weight") {
    if (a != 0 && b > UINT64_MAX / a)
        throw BudgetError(std::string(what) + ": product exceeds 64-bit range");
    return a * b;
}

inline uint64_t pow_u64(uint64_t base, unsigned exp, const char* what = "weight") {
    uint64_t r = 1;
    while (exp--) r = mul_u64(r, base, what);
    return r;
}

inline uint64_t binom_u64(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // exact at every step: r*(n-k+i) is divisible by i
        r = mul_u64(r, n - k + i, "binomial") / i;
    }
    return r;
}

// Exact rational, always normalized with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n, int64_t d = 1) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InvalidArgument("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    double approx() const { return double(num_) / double(den_); }

  private:
    using i128 = __int128;
    int64_t num_, den_;

    void normalize() {
        if (den_ == 0) throw InvalidArgument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw InvalidArgument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw BudgetError("rational overflow: value exceeds 64-bit range");
        Rational r;
        r.num_ = int64_t(n);
        r.den_ = int64_t(d);
        return r;
    }
};

// Seed-deterministic generator: raw mt19937_64 stream (bit-exact across
// platforms) with rejection sampling, so no library distribution is involved.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t n) {
        if (n == 0) throw InvalidArgument("Rng::below(0)");
        if ((n & (n - 1)) == 0) return next() & (n - 1);
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int bit() { return int(next() >> 63); }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

  private:
    std::mt19937_64 eng_;
};

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << data;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace gapkit
