#pragma once

// Dense polynomials over F_p. Used two ways: small p (pattern scans over all
// primes up to 1e5) and 67-bit p (the splitting test inside the Lehmer
// search), so the hot paths lean on raw mpz calls and keep reductions to one
// mpz_mod per output coefficient.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modgal/arith.hpp"
#include "modgal/cycle_type.hpp"
#include "modgal/poly.hpp"

namespace modgal {

class ModPoly {
  public:
    explicit ModPoly(Int p) : p_(std::move(p)) { check_modulus(); }
    ModPoly(Int p, std::vector<Int> ascending)
        : p_(std::move(p)), c_(std::move(ascending)) {
        check_modulus();
        for (auto& x : c_)
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
        trim();
    }

    static ModPoly x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }
    static ModPoly constant(const Int& p, const Int& v) {
        return ModPoly(p, {v});
    }

    const Int& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Int& coeff(std::size_t i) const {
        static const Int zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const Int& leading() const {
        if (c_.empty()) throw std::logic_error("leading(): zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const ModPoly&, const ModPoly&) = default;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        a.require_same_modulus(b);
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return ModPoly(a.p_, std::move(c));
    }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        a.require_same_modulus(b);
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return ModPoly(a.p_, std::move(c));
    }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.require_same_modulus(b);
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                           b.c_[j].get_mpz_t());
        return ModPoly(a.p_, std::move(c));
    }

    ModPoly make_monic() const {
        if (is_zero()) return *this;
        if (is_monic()) return *this;
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), c_.back().get_mpz_t(), p_.get_mpz_t()))
            throw std::domain_error("make_monic: leading coefficient not invertible");
        std::vector<Int> c(c_);
        for (auto& x : c) x *= inv;
        return ModPoly(p_, std::move(c));
    }

    void require_same_modulus(const ModPoly& other) const {
        if (p_ != other.p_)
            throw std::invalid_argument("ModPoly: modulus mismatch");
    }

  private:
    void check_modulus() const {
        if (p_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Int p_;
    std::vector<Int> c_;  // ascending degree, values in [0, p)
};

inline ModPoly reduce_mod(const IntPoly& f, const Int& p) {
    return ModPoly(p, f.coeffs());
}

// Remainder of a by monic b (synthetic division, no inversions).
inline ModPoly mod_monic(const ModPoly& a, const ModPoly& b) {
    a.require_same_modulus(b);
    if (!b.is_monic()) throw std::invalid_argument("mod_monic: divisor not monic");
    long db = b.degree();
    if (a.degree() < db) return a;
    const Int& p = a.modulus();
    std::vector<Int> r;
    r.reserve(static_cast<std::size_t>(a.degree()) + 1);
    for (long i = 0; i <= a.degree(); ++i)
        r.push_back(a.coeff(static_cast<std::size_t>(i)));
    for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
        Int& q = r[static_cast<std::size_t>(i)];
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        if (q == 0) continue;
        for (long j = 0; j < db; ++j) {
            Int& dst = r[static_cast<std::size_t>(i - db + j)];
            mpz_submul(dst.get_mpz_t(), q.get_mpz_t(),
                       b.coeff(static_cast<std::size_t>(j)).get_mpz_t());
        }
        q = 0;
    }
    r.resize(static_cast<std::size_t>(db));
    return ModPoly(p, std::move(r));
}

// Quotient a / b for monic b; exact when b divides a.
inline ModPoly div_monic(const ModPoly& a, const ModPoly& b) {
    a.require_same_modulus(b);
    if (!b.is_monic()) throw std::invalid_argument("div_monic: divisor not monic");
    long db = b.degree();
    if (a.degree() < db) return ModPoly(a.modulus());
    std::vector<Int> r;
    r.reserve(static_cast<std::size_t>(a.degree()) + 1);
    for (long i = 0; i <= a.degree(); ++i) r.push_back(a.coeff(static_cast<std::size_t>(i)));
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
        Int& c = r[static_cast<std::size_t>(i)];
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), a.modulus().get_mpz_t());
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j < db; ++j) {
            Int& dst = r[static_cast<std::size_t>(i - db + j)];
            mpz_submul(dst.get_mpz_t(), c.get_mpz_t(),
                       b.coeff(static_cast<std::size_t>(j)).get_mpz_t());
        }
    }
    return ModPoly(a.modulus(), std::move(q));
}

// Monic gcd by the Euclidean algorithm over F_p.
inline ModPoly gcd_mod(const ModPoly& a_in, const ModPoly& b_in) {
    a_in.require_same_modulus(b_in);
    ModPoly a = a_in, b = b_in;
    while (!b.is_zero()) {
        ModPoly r = mod_monic(a, b.make_monic());
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

namespace detail {

// Schoolbook product of a and b reduced mod monic P, all over F_p.
inline ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& P) {
    return mod_monic(a * b, P);
}

}  // namespace detail

// base^e in F_p[x]/(P) by square-and-multiply.
inline ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& P) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    if (!P.is_monic() || P.degree() < 1)
        throw std::invalid_argument("pow_mod: modulus polynomial must be monic of degree >= 1");
    ModPoly result = ModPoly::constant(P.modulus(), Int(1));
    result = mod_monic(result, P);
    if (e == 0) return result;
    ModPoly b = mod_monic(base, P);
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    ModPoly acc = b;
    for (long i = bits - 2; i >= 0; --i) {
        acc = detail::mul_mod(acc, acc, P);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
            acc = detail::mul_mod(acc, b, P);
    }
    return acc;
}

// x^e in F_p[x]/(P).
inline ModPoly pow_x_mod(const Int& e, const ModPoly& P) {
    return pow_mod(ModPoly::x(P.modulus()), e, P);
}

// g(h) mod P by Horner; the workhorse for iterating Frobenius, since
// w^p = w(x^p) when w has coefficients in F_p.
inline ModPoly compose_mod(const ModPoly& g, const ModPoly& h, const ModPoly& P) {
    g.require_same_modulus(h);
    ModPoly acc(P.modulus());
    for (long i = g.degree(); i >= 0; --i) {
        acc = detail::mul_mod(acc, h, P);
        acc = acc + ModPoly::constant(P.modulus(), g.coeff(static_cast<std::size_t>(i)));
    }
    return acc;
}

inline bool is_squarefree_mod(const ModPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("is_squarefree_mod: zero polynomial");
    if (f.degree() == 0) return true;
    // formal derivative over F_p
    std::vector<Int> d(static_cast<std::size_t>(std::max(f.degree(), 0l)), Int(0));
    for (long i = 1; i <= f.degree(); ++i)
        d[static_cast<std::size_t>(i - 1)] =
            Int(static_cast<unsigned long>(i)) * f.coeff(static_cast<std::size_t>(i));
    ModPoly fp(f.modulus(), std::move(d));
    if (fp.is_zero()) return false;  // f is a p-th power
    return gcd_mod(f, fp).degree() == 0;
}

// Distinct-degree factorization pattern of a monic squarefree P over F_p.
// Stage d computes x^(p^d) by applying Frobenius to the previous stage
// (composition with x^p), takes gcd with x^(p^d) - x, and splits off the
// degree-d part.
inline CycleType ddf_pattern(const ModPoly& P_in) {
    if (!P_in.is_monic() || P_in.degree() < 1)
        throw std::invalid_argument("ddf_pattern: need monic polynomial of degree >= 1");
    if (!is_squarefree_mod(P_in))
        throw std::invalid_argument("ddf_pattern: polynomial is not squarefree");
    const Int& p = P_in.modulus();
    ModPoly f = P_in;
    CycleType pattern;
    if (f.degree() == 1) {
        pattern.add(1);
        return pattern;
    }
    ModPoly xp = pow_x_mod(p, f);
    ModPoly w = xp;  // x^(p^d) mod f, d = 1 here
    long d = 1;
    while (f.degree() >= 2 * d) {
        ModPoly g = gcd_mod(f, w - ModPoly::x(p));
        if (g.degree() > 0) {
            pattern.add(static_cast<int>(d),
                        static_cast<int>(g.degree() / d));
            f = div_monic(f, g);
            if (f.degree() == 0) return pattern;
            w = mod_monic(w, f);
            xp = mod_monic(xp, f);
        }
        ++d;
        if (f.degree() >= 2 * d) w = compose_mod(w, xp, f);
    }
    if (f.degree() > 0) pattern.add(static_cast<int>(f.degree()));
    return pattern;
}

// True iff x^(p^2) = x and x^p != x in F_p[x]/(P): every irreducible factor
// of P has degree 1 or 2 and degree 2 occurs.
inline bool splitting_test(const ModPoly& P) {
    if (!P.is_monic() || P.degree() < 1)
        throw std::invalid_argument("splitting_test: need monic polynomial of degree >= 1");
    if (!is_squarefree_mod(P))
        throw std::invalid_argument("splitting_test: polynomial is not squarefree");
    const Int& p = P.modulus();
    ModPoly xp = pow_x_mod(p, P);
    if (xp == ModPoly::x(p)) return false;
    ModPoly xp2 = compose_mod(xp, xp, P);  // x^(p^2)
    return xp2 == ModPoly::x(p);
}

}  // namespace modgal
