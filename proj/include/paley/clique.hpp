#pragma once

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "paley/character.hpp"
#include "paley/graph.hpp"
#include "paley/residue.hpp"

namespace paley {

struct too_large : std::invalid_argument {
    explicit too_large(const std::string& what) : std::invalid_argument(what) {}
};

struct not_one_mod_4 : std::invalid_argument {
    not_one_mod_4() : std::invalid_argument("p must be a prime with p = 1 mod 4") {}
};

/// Exact triangle count: sum over edges of |N(u) & N(v)|, divided by 3.
/// partitions > 1 splits the edge loop into chunks summed separately; the
/// total is identical for any partitioning.
inline bigint count_triangles_brute(const Graph& g, int partitions = 1) {
    int64 n = g.vertex_count();
    std::vector<int64> partial(static_cast<size_t>(std::max(partitions, 1)), 0);
    for (int64 u = 0; u < n; ++u) {
        auto ru = g.row(u);
        int64& acc = partial[static_cast<size_t>(u) % partial.size()];
        for (int64 v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            auto rv = g.row(v);
            for (size_t w = 0; w < g.words_per_row(); ++w)
                acc += std::popcount(ru[w] & rv[w]);
        }
    }
    int64 total = 0;
    for (int64 part : partial) total += part;
    return bigint(total) / 3;
}

/// Exact K4 count: for each edge, count ordered adjacent pairs inside the
/// common neighborhood; every K4 contributes 12 to the total.
inline bigint count_k4_brute(const Graph& g, int partitions = 1) {
    int64 n = g.vertex_count();
    size_t words = g.words_per_row();
    std::vector<uint64_t> common(words);
    std::vector<int64> partial(static_cast<size_t>(std::max(partitions, 1)), 0);
    for (int64 u = 0; u < n; ++u) {
        auto ru = g.row(u);
        int64& acc = partial[static_cast<size_t>(u) % partial.size()];
        for (int64 v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            auto rv = g.row(v);
            for (size_t w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
            for (size_t w = 0; w < words; ++w) {
                uint64_t bits = common[w];
                while (bits) {
                    int64 vertex = static_cast<int64>(w) * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    auto rw = g.row(vertex);
                    for (size_t w2 = 0; w2 < words; ++w2)
                        acc += std::popcount(common[w2] & rw[w2]);
                }
            }
        }
    }
    int64 total = 0;
    for (int64 part : partial) total += part;
    return bigint(total) / 12;
}

namespace detail {
inline bigint pow_big(int64 base, int exp) {
    bigint r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}
inline bigint exact_div(bigint numerator, int64 divisor, const char* what) {
    if (numerator % divisor != 0) throw std::logic_error(std::string("not divisible: ") + what);
    return numerator / divisor;
}
}  // namespace detail

/// K3(G_{p^alpha}) = p^(3a-2) (p-1)(p-5) / 48.
inline bigint k3_formula(int64 p, int alpha) {
    if (p % 4 != 1) throw not_one_mod_4();
    PrimePowerModulus::of(p, alpha);  // validates p prime, alpha >= 1
    return detail::exact_div(detail::pow_big(p, 3 * alpha - 2) * (p - 1) * (p - 5), 48, "K3 by 48");
}

/// K4(G_{p^alpha}) = p^(2a-1) (p-1) [ p^(2a-2){(p-9)^2 - 2p} + J^2 + conj(J)^2 ] / 1536.
inline bigint k4_formula(int64 p, int alpha) {
    if (p % 4 != 1) throw not_one_mod_4();
    auto m = PrimePowerModulus::of(p, alpha);
    GaussianInt j = jacobi_sum(Character::quartic(m), Character::quadratic(m));
    GaussianInt k = j * j + j.conj() * j.conj();
    if (k.im != 0) throw std::logic_error("J^2 + conj(J)^2 is not a rational integer");
    bigint bracket = detail::pow_big(p, 2 * alpha - 2) * ((p - 9) * (p - 9) - 2 * p) + k.re;
    bigint result =
        detail::exact_div(detail::pow_big(p, 2 * alpha - 1) * (p - 1) * bracket, 1536, "K4 by 1536");
    if (result < 0) throw std::logic_error("K4 formula produced a negative count");
    return result;
}

/// Evans-Pulham-Sheehan count for the prime case: with p = a^2 + b^2, a even,
/// K4(G(p)) = p (p-1) ((p-9)^2 - 4a^2) / 1536.
inline bigint evans_k4(int64 p) {
    if (p % 4 != 1) throw not_one_mod_4();
    PrimePowerModulus::of(p, 1);
    int64 a = -1;
    for (int64 c = 2; c * c < p; c += 2) {
        int64 rest = p - c * c;
        int64 root = static_cast<int64>(std::sqrt(static_cast<double>(rest)));
        while (root * root < rest) ++root;
        while (root * root > rest) --root;
        if (root * root == rest) { a = c; break; }
    }
    if (a < 0) throw std::logic_error("no two-square decomposition with even a");
    return detail::exact_div(bigint(p) * (p - 1) * ((p - 9) * (p - 9) - 4 * a * a), 1536,
                             "Evans K4 by 1536");
}

/// (S, S0): the full chi((1-x^2)(1-y^2)(x^2-y^2)) double sum and its
/// restriction to the index set X; asserts S0 = S + 4 p^(2a-2) and
/// S = 2 p^(2a-2) + K.
inline std::pair<int64, int64> lemma_S_pair(const PrimePowerModulus& m) {
    if (m.n > 2000) throw too_large("lemma_S_pair: p^alpha must be <= 2000");
    Character chi = Character::quadratic(m);
    int64 n = m.n, p = m.p;
    int64 s = 0, s0 = 0;
    for (int64 x = 0; x < n; ++x)
        for (int64 y = 0; y < n; ++y) {
            int64 fx = (1 - x * x) % n, fy = (1 - y * y) % n, fxy = (x * x - y * y) % n;
            int64 term = chi.sign(fx * fy % n * fxy);
            s += term;
            bool in_x = x % p != 0 && y % p != 0 && fx % p != 0 && fy % p != 0 && fxy % p != 0;
            if (in_x) s0 += term;
        }
    int64 q2 = (n / p) * (n / p);  // p^(2a-2)
    if (s0 != s + 4 * q2) throw std::logic_error("S0 != S + 4 p^(2a-2)");
    if (s != 2 * q2 + lemma_K_double_sum(m)) throw std::logic_error("S != 2 p^(2a-2) + K");
    return {s, s0};
}

/// Every intermediate of the K4 count: the A/B cardinalities, the eight-way
/// sign-table partition of X, the S/S0/I/J/K double sums, f, and the count.
struct Theorem2Trace {
    int64 p;
    int alpha;
    int64 A;
    int64 B;
    std::array<int64, 8> beta;
    int64 S;
    int64 S0;
    int64 I;
    int64 Jsum;
    int64 K;
    int64 f;
    bigint k4;
};

inline Theorem2Trace theorem2_trace(int64 p, int alpha) {
    auto m = PrimePowerModulus::of(p, alpha);
    if (m.n > 2000) throw too_large("theorem2_trace: p^alpha must be <= 2000");
    Character chi = Character::quadratic(m);
    int64 n = m.n;

    Theorem2Trace t{};
    t.p = p;
    t.alpha = alpha;
    t.beta.fill(0);

    for (int64 x = 0; x < n; ++x)
        for (int64 y = 0; y < n; ++y) {
            int64 fx = (1 - x * x) % n, fy = (1 - y * y) % n, fxy = (x * x - y * y) % n;
            int64 term = chi.sign(fx * fy % n * fxy);
            t.S += term;
            bool in_x = x % p != 0 && y % p != 0 && fx % p != 0 && fy % p != 0 && fxy % p != 0;
            if (!in_x) continue;
            t.S0 += term;
            int idx = (chi.sign(fx) == 1 ? 0 : 4) + (chi.sign(fy) == 1 ? 0 : 2)
                      + (chi.sign(fxy) == 1 ? 0 : 1);
            ++t.beta[static_cast<size_t>(idx)];
        }

    for (int64 x = 0; x < n; ++x) {
        if (x % p == 0) continue;
        for (int64 y = 0; y < n; ++y) {
            if (y % p == 0) continue;
            int64 base = (1 - x) % n * ((1 - y) % n) % n * ((y - x) % n) % n;
            t.I += chi.sign(base);
            t.Jsum += chi.sign(base % n * x);
            t.K += chi.sign(base % n * x % n * y);
        }
    }

    const auto& b = t.beta;
    t.A = b[0] + b[1];
    t.B = b[2] + b[3];
    int64 q2 = (n / p) * (n / p);  // p^(2a-2)

    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("theorem2_trace: ") + what);
    };
    require(b[0] + b[2] == t.A, "beta1 + beta3 = A");
    require(b[0] + b[4] == t.A, "beta1 + beta5 = A");
    require(b[1] + b[5] == t.B, "beta2 + beta6 = B");
    require(b[4] + b[6] == t.B, "beta5 + beta7 = B");
    require(b[6] + b[7] == t.B, "beta7 + beta8 = B");
    require(t.A == q2 * ((p - 5) / 2) * ((p - 9) / 2), "A closed form");
    require(t.B == q2 * ((p - 5) / 2) * ((p - 1) / 2), "B closed form");
    require(t.S0 == b[0] - b[1] - b[2] + b[3] - b[4] + b[5] + b[6] - b[7], "S0 sign expansion");
    require(t.S0 == t.S + 4 * q2, "S0 = S + 4 p^(2a-2)");
    require(t.I == 2 * q2, "I = 2 p^(2a-2)");
    require(t.Jsum == 2 * q2, "J = 2 p^(2a-2)");
    require(t.S == -4 * q2 + t.I + 2 * t.Jsum + t.K, "S = -4 p^(2a-2) + I + 2J + K");
    require(b[0] % 8 == 0, "beta1 divisible by 8");
    t.f = b[0] / 8;
    require((t.S0 - q2 * (p - 5) * (15 - p)) % 64 == 0, "S0 - q2 (p-5)(15-p) divisible by 64");
    require(t.f == (t.S0 - q2 * (p - 5) * (15 - p)) / 64, "f from S0");
    require(t.f == (q2 * (p * p - 20 * p + 81) + t.K) / 64, "f from K");
    t.k4 = detail::exact_div(detail::pow_big(p, 2 * alpha - 1) * (p - 1) * t.f, 24, "K4 by 24");
    require(t.k4 == k4_formula(p, alpha), "trace k4 matches the closed formula");
    return t;
}

}  // namespace paley
