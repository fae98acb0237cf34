#pragma once

// Univariate polynomials over Z with exact arithmetic: the carrier for the
// table polynomials and for the discriminant computation. Resultants come in
// two independent flavours, a subresultant PRS (the production path, keeps
// coefficient growth polynomial) and fraction-free Sylvester elimination
// (the cross-check path).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modgal/arith.hpp"

namespace modgal {

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) {
        trim();
    }

    static IntPoly from_descending(std::vector<Int> descending) {
        std::vector<Int> c(descending.rbegin(), descending.rend());
        return IntPoly(std::move(c));
    }

    static IntPoly x_power(std::size_t k) {
        std::vector<Int> c(k + 1, Int(0));
        c[k] = 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
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

    const std::vector<Int>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                           b.c_[j].get_mpz_t());
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        std::vector<Int> c(a.c_);
        for (auto& x : c) x *= s;
        return IntPoly(std::move(c));
    }

    Int evaluate(const Int& x) const {
        Int r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;  // ascending degree, no trailing zeros
};

inline IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<Int> c(static_cast<std::size_t>(f.degree()), Int(0));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(f.degree()); ++i)
        c[i - 1] = Int(static_cast<unsigned long>(i)) * f.coeff(i);
    return IntPoly(std::move(c));
}

namespace detail {

inline Int content(const IntPoly& f) {
    Int g(0);
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // 0 for the zero polynomial
}

inline IntPoly divide_exact(const IntPoly& f, const Int& s) {
    std::vector<Int> c(f.coeffs());
    for (auto& x : c)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return IntPoly(std::move(c));
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg R < deg B.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    long db = b.degree();
    if (db < 0) throw std::invalid_argument("pseudo_remainder: division by zero");
    IntPoly r = a;
    long e = a.degree() - db + 1;
    const Int& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        // r <- lc(b)*r - lc(r)*x^(deg r - deg b)*b
        std::vector<Int> c(static_cast<std::size_t>(r.degree()), Int(0));
        long shift = r.degree() - db;
        for (long i = 0; i < r.degree(); ++i) {
            Int v = lb * r.coeff(static_cast<std::size_t>(i));
            if (i >= shift)
                v -= r.leading() * b.coeff(static_cast<std::size_t>(i - shift));
            c[static_cast<std::size_t>(i)] = std::move(v);
        }
        r = IntPoly(std::move(c));
        --e;
    }
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(),
                   static_cast<unsigned long>(e));
        r = scale * r;
    }
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace detail

// Resultant via the subresultant polynomial remainder sequence
// (Cohen, Algorithm 3.3.7). Exact over Z.
inline Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return Int(0);
    if (f.degree() == 0) return detail::int_pow(f.coeff(0), g.degree());
    if (g.degree() == 0) return detail::int_pow(g.coeff(0), f.degree());

    IntPoly a = f, b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    Int ca = detail::content(a), cb = detail::content(b);
    a = detail::divide_exact(a, ca);
    b = detail::divide_exact(b, cb);
    Int t = detail::int_pow(ca, static_cast<unsigned long>(b.degree())) *
            detail::int_pow(cb, static_cast<unsigned long>(a.degree()));

    Int g_ = 1, h = 1;
    while (true) {
        long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPoly r = detail::pseudo_remainder(a, b);
        a = b;
        Int divisor = g_ * detail::int_pow(h, static_cast<unsigned long>(delta));
        if (r.is_zero()) return Int(0);  // common factor
        b = detail::divide_exact(r, divisor);
        g_ = a.leading();
        if (delta > 0) {
            // h <- g^delta * h^(1-delta), exact
            Int num = detail::int_pow(g_, static_cast<unsigned long>(delta));
            if (delta > 1) {
                Int den = detail::int_pow(h, static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            } else {
                h = num;
            }
        }
        if (b.degree() == 0) break;
    }
    // h <- lc(B)^(deg A) * h^(1 - deg A), exact
    Int num = detail::int_pow(b.coeff(0), static_cast<unsigned long>(a.degree()));
    if (a.degree() > 1) {
        Int den = detail::int_pow(h, static_cast<unsigned long>(a.degree() - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        h = num;
    }
    return s * t * h;
}

// Independent route: determinant of the Sylvester matrix by Bareiss
// fraction-free elimination.
inline Int resultant_sylvester(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return Int(0);
    long n = f.degree(), m = g.degree();
    if (n == 0) return detail::int_pow(f.coeff(0), m);
    if (m == 0) return detail::int_pow(g.coeff(0), n);
    std::size_t dim = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Int>> mat(dim, std::vector<Int>(dim, Int(0)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                f.coeff(static_cast<std::size_t>(n - j));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            mat[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + j)] =
                g.coeff(static_cast<std::size_t>(m - j));

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (mat[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < dim && mat[piv][k] == 0) ++piv;
            if (piv == dim) return Int(0);
            std::swap(mat[k], mat[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                mat[i][j] = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mpz_divexact(mat[i][j].get_mpz_t(), mat[i][j].get_mpz_t(),
                             prev.get_mpz_t());
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    return sign * mat[dim - 1][dim - 1];
}

// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') for monic f of degree n >= 2.
inline Int discriminant(const IntPoly& f) {
    if (!f.is_monic())
        throw std::invalid_argument("discriminant: polynomial must be monic");
    long n = f.degree();
    if (n < 2)
        throw std::invalid_argument("discriminant: degree must be >= 2");
    Int r = resultant(f, derivative(f));
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

}  // namespace modgal
