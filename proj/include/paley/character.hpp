#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "paley/gaussian.hpp"
#include "paley/residue.hpp"

namespace paley {

struct modulus_mismatch : std::invalid_argument {
    modulus_mismatch() : std::invalid_argument("characters have different moduli") {}
};

struct mapping_failure : std::logic_error {
    explicit mapping_failure(const std::string& what) : std::logic_error(what) {}
};

struct non_unit_shift : std::invalid_argument {
    non_unit_shift() : std::invalid_argument("shift a must be a unit mod p^alpha") {}
};

/// A Dirichlet character mod p^alpha of order 1, 2 or 4, precomputed as a
/// full value table. Values are fourth roots of unity on units, 0 elsewhere.
class Character {
  public:
    static Character trivial(const PrimePowerModulus& m) {
        Character c(m, 1);
        for (int64 x = 0; x < m.n; ++x)
            if (std::gcd(x, m.n) == 1) c.code_[static_cast<size_t>(x)] = 0;
        return c;
    }

    /// The unique order-2 character: a^(phi/2) mod n mapped {1 -> +1, n-1 -> -1},
    /// cross-checked against unit-square membership.
    static Character quadratic(const PrimePowerModulus& m) {
        Character c(m, 2);
        std::vector<bool> square(static_cast<size_t>(m.n), false);
        for (int64 x : unit_squares(m.n)) square[static_cast<size_t>(x)] = true;
        for (int64 x = 0; x < m.n; ++x) {
            if (std::gcd(x, m.n) != 1) continue;
            int64 v = mod_pow(x, m.phi / 2, m.n);
            if (v != 1 && v != m.n - 1)
                throw mapping_failure("x^(phi/2) mod n is not +-1 for a unit");
            bool plus = (v == 1);
            if (plus != square[static_cast<size_t>(x)])
                throw mapping_failure("Euler criterion disagrees with square membership");
            c.code_[static_cast<size_t>(x)] = plus ? 0 : 2;
        }
        return c;
    }

    /// Canonical order-4 character: psi(g^t) = i^t for the smallest primitive root g.
    static Character quartic(const PrimePowerModulus& m) {
        Character c(m, 4);
        int64 x = 1;
        for (int64 t = 0; t < m.phi; ++t) {
            c.code_[static_cast<size_t>(x)] = static_cast<int8_t>(t % 4);
            x = x * m.g % m.n;
        }
        return c;
    }

    Character conjugate() const {
        Character c(*this);
        for (auto& code : c.code_)
            if (code == 1 || code == 3) code = static_cast<int8_t>(4 - code);
        return c;
    }

    GaussianInt operator()(int64 x) const {
        static constexpr GaussianInt powers_of_i[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        x %= mod_.n;
        if (x < 0) x += mod_.n;
        int8_t code = code_[static_cast<size_t>(x)];
        return code < 0 ? GaussianInt{0, 0} : powers_of_i[code];
    }

    /// Real value for order <= 2 characters: +1, -1 or 0.
    int sign(int64 x) const {
        x %= mod_.n;
        if (x < 0) x += mod_.n;
        int8_t code = code_[static_cast<size_t>(x)];
        if (code < 0) return 0;
        if (code == 0) return 1;
        if (code == 2) return -1;
        throw std::logic_error("sign() called on an order-4 character value");
    }

    const PrimePowerModulus& modulus() const { return mod_; }
    int order() const { return order_; }

  private:
    Character(const PrimePowerModulus& m, int order)
        : mod_(m), order_(order), code_(static_cast<size_t>(m.n), -1) {}

    PrimePowerModulus mod_;
    int order_;
    std::vector<int8_t> code_;  // -1 = zero, t = i^t
};

/// Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity.
inline int jacobi_symbol(int64 a, int64 n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi_symbol: n must be odd and >= 1");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// J(psi, chi) = sum over x mod p^alpha of psi(x) chi(1-x).
inline GaussianInt jacobi_sum(const Character& psi, const Character& chi) {
    if (psi.modulus().n != chi.modulus().n) throw modulus_mismatch();
    int64 n = psi.modulus().n;
    GaussianInt sum{0, 0};
    for (int64 x = 0; x < n; ++x) sum = sum + psi(x) * chi(1 - x);
    return sum;
}

/// Direct sum over units x of chi(x^2 - a); asserts the closed form
/// -(1 + chi(a)) p^(alpha-1).
inline int64 sum_chi_x2_minus_a(const Character& chi, int64 a) {
    const auto& m = chi.modulus();
    if (std::gcd(a % m.p, m.p) != 1) throw non_unit_shift();
    int64 sum = 0;
    for (int64 x = 0; x < m.n; ++x) {
        if (std::gcd(x, m.n) != 1) continue;
        sum += chi.sign(x * x - a);
    }
    int64 closed = -(1 + chi.sign(a)) * (m.n / m.p);
    if (sum != closed) throw mapping_failure("sum chi(x^2-a) violates its closed form");
    return sum;
}

inline int64 sum_chi_x2_minus_a(const PrimePowerModulus& m, int64 a) {
    return sum_chi_x2_minus_a(Character::quadratic(m), a);
}

/// |{x mod p^alpha : p does not divide x or 1-x^2, chi(1-x^2)=1}|;
/// asserts the closed form p^(alpha-1)(p-5)/2.
inline int64 count_chi_one_minus_x2(const Character& chi) {
    const auto& m = chi.modulus();
    int64 count = 0;
    for (int64 x = 0; x < m.n; ++x)
        if (chi.sign(x) != 0 && chi.sign(1 - x * x) == 1) ++count;
    if (count != (m.n / m.p) * (m.p - 5) / 2)
        throw mapping_failure("count of chi(1-x^2)=1 violates its closed form");
    return count;
}

inline int64 count_chi_one_minus_x2(const PrimePowerModulus& m) {
    return count_chi_one_minus_x2(Character::quadratic(m));
}

/// Sum over all x mod p^alpha of chi((x-a)(x-b)); asserts the four-case
/// closed form.
inline int64 sum_chi_shifted_pair(const Character& chi, int64 a, int64 b) {
    const auto& m = chi.modulus();
    int64 sum = 0;
    for (int64 x = 0; x < m.n; ++x) sum += chi.sign((x - a) * (x - b));

    int64 q = m.n / m.p;  // p^(alpha-1)
    int64 closed;
    bool pa = ((a % m.p) + m.p) % m.p == 0;
    bool pb = ((b % m.p) + m.p) % m.p == 0;
    if (pa && pb) {
        closed = q * (m.p - 1);
    } else if (pa != pb) {
        closed = -q;
    } else {
        // both units: split on p | 1 - b a^{-1}, i.e. a = b mod p
        closed = (((a - b) % m.p) == 0) ? q * (m.p - 1) : -q;
    }
    if (sum != closed) throw mapping_failure("sum chi((x-a)(x-b)) violates its closed form");
    return sum;
}

inline int64 sum_chi_shifted_pair(const PrimePowerModulus& m, int64 a, int64 b) {
    return sum_chi_shifted_pair(Character::quadratic(m), a, b);
}

/// K = sum over unit pairs (x,y) of chi((1-x)(1-y)(y-x)xy), by direct double
/// enumeration; asserts K = J(psi,chi)^2 + conj(J(psi,chi))^2.
inline int64 lemma_K_double_sum(const PrimePowerModulus& m) {
    Character chi = Character::quadratic(m);
    Character psi = Character::quartic(m);
    int64 sum = 0;
    for (int64 x = 0; x < m.n; ++x) {
        if (std::gcd(x, m.n) != 1) continue;
        for (int64 y = 0; y < m.n; ++y) {
            if (std::gcd(y, m.n) != 1) continue;
            sum += chi.sign((1 - x) % m.n * ((1 - y) % m.n) % m.n * ((y - x) % m.n) % m.n
                            * (x * y % m.n) % m.n);
        }
    }
    GaussianInt j = jacobi_sum(psi, chi);
    GaussianInt k = j * j + j.conj() * j.conj();
    if (k.im != 0 || k.re != sum)
        throw mapping_failure("K double sum violates J^2 + conj(J)^2");
    return sum;
}

}  // namespace paley
