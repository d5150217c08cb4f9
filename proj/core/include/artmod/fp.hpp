#pragma once

#include <cstdint>
#include <vector>

#include "artmod/errors.hpp"

namespace artmod {

// Coordinate vector over GF(p). The modulus is carried by the container
// (matrix, subspace, algebra) owning the vector.
using FpVec = std::vector<std::uint8_t>;

// Largest supported prime. Everything here is dense and byte-sized; large
// primes and non-prime fields are out of scope.
constexpr int kMaxPrime = 17;

constexpr bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_prime(int p) {
    if (!is_prime(p) || p > kMaxPrime)
        throw ValueError("unsupported modulus " + std::to_string(p) +
                         " (need a prime <= " + std::to_string(kMaxPrime) + ")");
}

inline int fp_reduce(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int fp_neg(int v, int p) { return v == 0 ? 0 : p - v; }

inline int fp_inv(int v, int p) {
    // p <= 17, a scan beats bookkeeping
    for (int j = 1; j < p; ++j)
        if (v * j % p == 1) return j;
    throw ValueError("division by zero in GF(" + std::to_string(p) + ")");
}

// Scalar in GF(p) carrying its modulus; mixed-modulus arithmetic throws.
struct Fp {
    std::uint8_t value = 0;
    std::uint8_t p = 2;

    Fp() = default;
    Fp(int v, int modulus) : value(static_cast<std::uint8_t>(fp_reduce(v, modulus))),
                             p(static_cast<std::uint8_t>(modulus)) {
        check_prime(modulus);
    }

    friend Fp operator+(Fp a, Fp b) { return bin(a, b, a.value + b.value); }
    friend Fp operator-(Fp a, Fp b) { return bin(a, b, a.value + fp_neg(b.value, a.p)); }
    friend Fp operator*(Fp a, Fp b) { return bin(a, b, a.value * b.value); }
    friend Fp operator/(Fp a, Fp b) { return bin(a, b, a.value * fp_inv(b.value, a.p)); }
    friend bool operator==(Fp a, Fp b) { return a.p == b.p && a.value == b.value; }

    Fp inv() const { return Fp(fp_inv(value, p), p); }
    bool is_zero() const { return value == 0; }

private:
    static Fp bin(Fp a, Fp b, int raw) {
        if (a.p != b.p) throw MismatchError("GF(p) scalars with different moduli");
        Fp r;
        r.p = a.p;
        r.value = static_cast<std::uint8_t>(raw % a.p);
        return r;
    }
};

inline bool vec_is_zero(const FpVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

// dst += c * src
inline void vec_addmul(FpVec& dst, const FpVec& src, int c, int p) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint8_t>((dst[i] + c * src[i]) % p);
}

}  // namespace artmod
