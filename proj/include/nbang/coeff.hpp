/**
 * @file coeff.hpp
 * @brief Exact coefficient domains: arbitrary-precision rationals (GMP) and
 *        compile-time prime fields F_p, with the Lucas binomial used by
 *        divided-power operators. No floating point anywhere.
 */
#ifndef NBANG_COEFF_HPP
#define NBANG_COEFF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nbang {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Binomial coefficient C(a,b) mod p by Lucas' theorem.
inline std::uint64_t binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t result = 1;
    while (a || b) {
        const std::uint64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        // C(ad, bd) for digits < p, computed directly mod p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t t = 0; t < bd; ++t) {
            num = num * ((ad - t) % p) % p;
            den = den * ((t + 1) % p) % p;
        }
        // den is invertible mod p (p prime, den a product of 1..bd < p)
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * (num * inv % p) % p;
        a /= p;
        b /= p;
    }
    return result;
}

/// The field F_P for a compile-time prime P.
template <unsigned P>
class Fp {
    static_assert(P >= 2, "modulus must be at least 2");

  public:
    static constexpr unsigned modulus = P;

    constexpr Fp() = default;
    constexpr Fp(long v) : v_(norm(v)) {}

    constexpr std::uint32_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
    friend constexpr Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend constexpr Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.v_) * b.v_ % P));
    }
    constexpr Fp operator-() const { return from_raw(v_ ? P - v_ : 0); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        Fp r = from_raw(1), base = *this;
        unsigned e = P - 2;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    friend constexpr bool operator==(Fp, Fp) = default;

    std::string to_string() const { return std::to_string(v_); }

  private:
    static constexpr std::uint32_t norm(long v) {
        long m = v % static_cast<long>(P);
        if (m < 0) m += P;
        return static_cast<std::uint32_t>(m);
    }
    static constexpr Fp from_raw(std::uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    std::uint32_t v_ = 0;
};

// Uniform helpers so templated code treats Rat and Fp<P> alike.

inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
template <unsigned P>
inline bool coeff_is_zero(const Fp<P>& c) { return c.is_zero(); }

inline std::string coeff_to_string(const Rat& c) { return c.get_str(); }
template <unsigned P>
inline std::string coeff_to_string(const Fp<P>& c) { return c.to_string(); }

inline Rat coeff_from_int(const Rat&, long v) { return Rat(v); }
template <unsigned P>
inline Fp<P> coeff_from_int(const Fp<P>&, long v) { return Fp<P>(v); }

template <class K>
struct field_traits {
    static constexpr bool is_prime_field = false;
    static constexpr unsigned characteristic = 0;
};
template <unsigned P>
struct field_traits<Fp<P>> {
    static constexpr bool is_prime_field = true;
    static constexpr unsigned characteristic = P;
};

}  // namespace nbang

#endif
