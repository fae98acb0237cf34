#pragma once

// Exact big-integer primitives shared by every other header: modular
// exponentiation, Jacobi symbols, deterministic primality for the search
// range, perfect squares and p-adic valuations. Everything is a pure
// function on immutable mpz values.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modgal {

using Int = mpz_class;

// Largest n for which Miller-Rabin with the first 13 prime bases is known
// to be correct (Sorenson & Webster). is_prime() refuses anything >= this.
inline const Int& deterministic_primality_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

inline Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
    if (exponent < 0)
        throw std::invalid_argument("mod_pow: negative exponent");
    if (modulus < 2)
        throw std::invalid_argument("mod_pow: modulus must be >= 2");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
             modulus.get_mpz_t());
    return r;
}

// Jacobi symbol (a|n) for odd n >= 1, by the binary reciprocity reduction.
inline int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: n must be odd and positive");
    Int a, n = n_in;
    mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
    int s = 1;
    while (a != 0) {
        unsigned long tz = mpz_scan1(a.get_mpz_t(), 0);
        if (tz > 0) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), tz);
            // (2|n) = -1 exactly when n = 3,5 mod 8
            unsigned long n8 = mpz_tdiv_ui(n.get_mpz_t(), 8);
            if ((tz & 1) && (n8 == 3 || n8 == 5)) s = -s;
        }
        // reciprocity for odd a, n
        if (mpz_tdiv_ui(a.get_mpz_t(), 4) == 3 &&
            mpz_tdiv_ui(n.get_mpz_t(), 4) == 3)
            s = -s;
        std::swap(a, n);
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? s : 0;
}

// Primes below n by a plain sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_below(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n <= 2) return out;
    std::vector<bool> composite(n, false);
    for (std::uint64_t i = 2; i < n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < n; j += i) composite[j] = true;
    }
    return out;
}

namespace detail {

// Strong probable-prime test to the given base; n odd, n > 3.
inline bool miller_rabin_strong(const Int& n, const Int& base) {
    Int a;
    mpz_mod(a.get_mpz_t(), base.get_mpz_t(), n.get_mpz_t());
    if (a == 0) return true;  // base shares no information
    Int nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Int d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), nm1.get_mpz_t(), s);
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge parameters (method A).
// Assumes n odd, n > 2, not a perfect square, no tiny prime factor.
inline bool lucas_strong(const Int& n) {
    // Find D = 5, -7, 9, -11, ... with (D|n) = -1.
    Int d = 5;
    while (true) {
        int j = jacobi(d, n);
        if (j == -1) break;
        if (j == 0) return false;  // proper factor found
        if (d > 0)
            d = -(d + 2);
        else
            d = -(d - 2);
    }
    // P = 1, Q = (1 - D) / 4.
    Int q = (1 - d) / 4;

    Int m = n + 1;
    unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    Int t;
    mpz_tdiv_q_2exp(t.get_mpz_t(), m.get_mpz_t(), s);  // n+1 = t * 2^s, t odd

    // Binary ladder for U_t, V_t, Q^t (P = 1 simplifies the +1 step).
    Int u = 0, v = 2, qk = 1;
    Int u2, v2;
    auto halve = [&n](Int& x) {
        if (mpz_odd_p(x.get_mpz_t())) x += n;
        mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    };
    for (long i = static_cast<long>(mpz_sizeinbase(t.get_mpz_t(), 2)) - 1;
         i >= 0; --i) {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        u2 = u * v % n;
        v2 = (v * v - 2 * qk) % n;
        u = u2;
        v = v2;
        qk = qk * qk % n;
        if (mpz_tstbit(t.get_mpz_t(), static_cast<unsigned long>(i))) {
            // add one: U_{k+1} = (U + V)/2, V_{k+1} = (D U + V)/2
            u2 = u + v;
            halve(u2);
            v2 = d * u + v;
            halve(v2);
            u = u2;
            v = v2;
            qk = qk * q % n;
        }
    }
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    if (u == 0 || v == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        v = (v * v - 2 * qk) % n;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        if (v == 0) return true;
        qk = qk * qk % n;
    }
    return false;
}

inline const std::vector<unsigned long>& small_trial_primes() {
    static const std::vector<unsigned long> ps = [] {
        auto v = primes_below(100);
        return std::vector<unsigned long>(v.begin(), v.end());
    }();
    return ps;
}

}  // namespace detail

// Deterministic primality for 0 <= n < 3.3e24: Baillie-PSW and Miller-Rabin
// with the first 13 prime bases must both accept.
inline bool is_prime(const Int& n) {
    if (n < 0) throw std::invalid_argument("is_prime: negative input");
    if (n >= deterministic_primality_bound())
        throw std::out_of_range(
            "is_prime: input above the deterministic range (< 3.3e24)");
    if (n < 2) return false;
    for (unsigned long p : detail::small_trial_primes()) {
        if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 100 * 100) return true;
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    // Baillie-PSW: strong base-2 plus strong Lucas.
    if (!detail::miller_rabin_strong(n, 2)) return false;
    if (!detail::lucas_strong(n)) return false;
    // First 13 prime bases (base 2 already done).
    for (unsigned long b : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                            29ul, 31ul, 37ul, 41ul})
        if (!detail::miller_rabin_strong(n, Int(b))) return false;
    return true;
}

inline std::optional<Int> perfect_square_root(const Int& n) {
    if (n < 0) throw std::invalid_argument("perfect_square_root: negative input");
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

struct Valuation {
    unsigned long v;
    Int cofactor;  // n / p^v, not divisible by p
};

inline Valuation p_adic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be nonzero");
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("p_adic_valuation: p must be prime");
    Valuation r;
    Int cof;
    r.v = mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    r.cofactor = cof;
    return r;
}

}  // namespace modgal
