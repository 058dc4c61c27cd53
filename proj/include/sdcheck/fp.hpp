#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdcheck {

// Arithmetic in the prime field F_p. All residues live in [0, p).
struct Fp {
    std::uint64_t p;

    explicit Fp(std::uint64_t modulus) : p(modulus) {
        if (!is_prime(modulus))
            throw std::invalid_argument("Fp: modulus " + std::to_string(modulus) + " is not prime");
        if (modulus > (std::uint64_t(1) << 31))
            throw std::invalid_argument("Fp: modulus exceeds 2^31");
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t neg(std::uint64_t a) const { return a % p == 0 ? 0 : p - a % p; }
    std::uint64_t reduce(std::int64_t a) const {
        std::int64_t r = a % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p, b = a % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // Fermat inverse; requires a != 0 mod p.
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw std::domain_error("Fp::inv: zero has no inverse");
        return pow(a, p - 2);
    }

    bool operator==(const Fp& o) const { return p == o.p; }
    bool operator!=(const Fp& o) const { return p != o.p; }
};

}  // namespace sdcheck
