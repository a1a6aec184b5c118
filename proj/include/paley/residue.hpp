#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace paley {

using int64 = long long;
using bigint = boost::multiprecision::cpp_int;

struct not_admissible : std::domain_error {
    explicit not_admissible(const std::string& what) : std::domain_error(what) {}
};

/// Deterministic trial division; returns (prime, exponent) pairs in
/// increasing prime order. factorize(1) == {}.
inline std::vector<std::pair<int64, int>> factorize(int64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<int64, int>> factors;
    for (int64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            factors.emplace_back(d, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

inline int64 euler_phi(int64 n) {
    int64 phi = 1;
    for (auto [p, e] : factorize(n)) {
        int64 pe = p;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe - pe / p;
    }
    return phi;
}

/// base^exp mod n by square-and-multiply. Negative bases are reduced first.
inline int64 mod_pow(int64 base, int64 exp, int64 n) {
    if (n < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be >= 0");
    base %= n;
    if (base < 0) base += n;
    int64 result = 1 % n;
    while (exp > 0) {
        if (exp & 1) result = static_cast<int64>(static_cast<__int128>(result) * base % n);
        base = static_cast<int64>(static_cast<__int128>(base) * base % n);
        exp >>= 1;
    }
    return result;
}

/// n with 2-adic valuation, odd prime factors, and their count.
struct Modulus {
    int64 n;
    std::vector<std::pair<int64, int>> factors;  // odd primes only
    int s;  // exponent of 2 in n
    int k;  // number of distinct odd prime factors

    static Modulus of(int64 n) {
        if (n < 1) throw std::invalid_argument("Modulus: n must be >= 1");
        Modulus m;
        m.n = n;
        m.s = 0;
        for (auto [p, e] : factorize(n)) {
            if (p == 2)
                m.s = e;
            else
                m.factors.emplace_back(p, e);
        }
        m.k = static_cast<int>(m.factors.size());
        return m;
    }
};

/// True iff -1 is a unit square mod n: n >= 3, at most one factor of 2,
/// and every odd prime factor is 1 mod 4.
inline bool is_admissible(int64 n) {
    if (n < 3) return false;
    auto m = Modulus::of(n);
    if (m.s > 1 || m.k < 1) return false;
    for (auto [p, e] : m.factors)
        if (p % 4 != 1) return false;
    return true;
}

/// Smallest unit x with x^2 = -1 mod n.
inline int64 sqrt_of_minus_one(int64 n) {
    if (!is_admissible(n)) throw not_admissible("no square root of -1 mod " + std::to_string(n));
    for (int64 x = 1; x < n; ++x)
        if (x * x % n == n - 1) return x;
    throw not_admissible("no square root of -1 mod " + std::to_string(n));  // unreachable
}

/// { x^2 mod n : gcd(x,n)=1 }, sorted.
inline std::vector<int64> unit_squares(int64 n) {
    if (n < 3) throw std::invalid_argument("unit_squares: n must be >= 3");
    std::vector<bool> seen(n, false);
    for (int64 x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) seen[x * x % n] = true;
    std::vector<int64> squares;
    for (int64 r = 0; r < n; ++r)
        if (seen[r]) squares.push_back(r);
    return squares;
}

/// Z_n^* is cyclic iff n in {1,2,4} or n = p^a or 2p^a for odd prime p.
inline bool is_cyclic_unit_group(int64 n) {
    if (n < 1) throw std::invalid_argument("is_cyclic_unit_group: n must be >= 1");
    if (n == 1 || n == 2 || n == 4) return true;
    if (n % 2 == 0) n /= 2;
    if (n % 2 == 0) return false;
    return factorize(n).size() == 1;
}

/// An odd prime power p^alpha with p = 1 mod 4, its totient, and the
/// smallest primitive root.
struct PrimePowerModulus {
    int64 p;
    int alpha;
    int64 n;
    int64 phi;
    int64 g;

    static PrimePowerModulus of(int64 p, int alpha) {
        if (alpha < 1) throw std::invalid_argument("PrimePowerModulus: alpha must be >= 1");
        if (p < 5 || p % 4 != 1 || factorize(p).size() != 1 || factorize(p)[0].second != 1)
            throw not_admissible("PrimePowerModulus: p must be a prime with p = 1 mod 4");
        PrimePowerModulus m;
        m.p = p;
        m.alpha = alpha;
        m.n = 1;
        for (int i = 0; i < alpha; ++i) m.n *= p;
        m.phi = m.n / p * (p - 1);
        m.g = find_primitive_root(m.n, m.phi);
        return m;
    }

  private:
    static int64 find_primitive_root(int64 n, int64 phi) {
        auto phi_factors = factorize(phi);
        for (int64 g = 2; g < n; ++g) {
            if (std::gcd(g, n) != 1) continue;
            bool primitive = true;
            for (auto [q, e] : phi_factors)
                if (mod_pow(g, phi / q, n) == 1) { primitive = false; break; }
            if (primitive) return g;
        }
        throw std::logic_error("primitive root not found");  // unreachable for valid input
    }
};

inline int64 primitive_root(const PrimePowerModulus& m) { return m.g; }

inline bigint binomial(int64 n, int64 r) {
    if (r < 0 || r > n) return 0;
    bigint result = 1;
    for (int64 i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

/// binom(phi(p^alpha)/2, i) * p^i = 0 mod p^alpha for all 1 <= i <= alpha-1.
inline bool check_binomial_divisibility(int64 p, int alpha) {
    auto m = PrimePowerModulus::of(p, alpha);
    bigint pa = m.n;
    bigint pi = 1;
    for (int i = 1; i <= alpha - 1; ++i) {
        pi *= p;
        if (binomial(m.phi / 2, i) * pi % pa != 0) return false;
    }
    return true;
}

}  // namespace paley
