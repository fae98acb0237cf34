#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include "modgal/modpoly.hpp"

using modgal::CycleType;
using modgal::Int;
using modgal::IntPoly;
using modgal::ModPoly;

namespace {

ModPoly mp(long p, std::initializer_list<long> ascending) {
    std::vector<Int> c;
    for (long v : ascending) c.emplace_back(v);
    return ModPoly(Int(p), std::move(c));
}

ModPoly random_poly(std::mt19937_64& rng, long p, int deg, bool monic) {
    std::vector<Int> c;
    for (int i = 0; i < deg; ++i)
        c.emplace_back(static_cast<unsigned long>(rng() % static_cast<std::uint64_t>(p)));
    if (monic)
        c.emplace_back(1);
    else
        c.emplace_back(1 + static_cast<unsigned long>(
                               rng() % static_cast<std::uint64_t>(p - 1)));
    return ModPoly(Int(p), std::move(c));
}

// Naive x^e mod P: e-fold multiplication by x.
ModPoly pow_x_naive(std::uint64_t e, const ModPoly& P) {
    ModPoly acc = ModPoly::constant(P.modulus(), 1);
    ModPoly x = ModPoly::x(P.modulus());
    for (std::uint64_t i = 0; i < e; ++i) acc = mod_monic(acc * x, P);
    return acc;
}

// Via gcd degrees on the unquotiented polynomial: n_e = deg gcd(P, x^(p^e) - x)
// counts roots in F_{p^e}; peel multiples to recover the factor-degree
// multiset. Round-trips through huge exponents p^e on purpose.
CycleType pattern_by_root_counts(const ModPoly& P) {
    const Int& p = P.modulus();
    long n = P.degree();
    std::vector<long> root_count(static_cast<std::size_t>(n) + 1, 0);
    for (long e = 1; e <= n; ++e) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        ModPoly frob = pow_x_mod(pe, P) - ModPoly::x(p);
        root_count[static_cast<std::size_t>(e)] = gcd_mod(P, frob).degree();
    }
    std::vector<long> mult(static_cast<std::size_t>(n) + 1, 0);
    CycleType pattern;
    for (long d = 1; d <= n; ++d) {
        long excess = root_count[static_cast<std::size_t>(d)];
        for (long e = 1; e < d; ++e)
            if (d % e == 0) excess -= e * mult[static_cast<std::size_t>(e)];
        mult[static_cast<std::size_t>(d)] = excess / d;
        pattern.add(static_cast<int>(d), static_cast<int>(excess / d));
    }
    return pattern;
}

// Exhaustive smallest-divisor factorization for tiny p and degree.
CycleType pattern_exhaustive(const ModPoly& P_in) {
    long p = P_in.modulus().get_si();
    ModPoly f = P_in;
    CycleType pattern;
    while (f.degree() > 0) {
        bool split = false;
        for (long d = 1; d <= f.degree() / 2 && !split; ++d) {
            std::uint64_t count = 1;
            for (long i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
            for (std::uint64_t code = 0; code < count && !split; ++code) {
                std::vector<Int> c;
                std::uint64_t v = code;
                for (long i = 0; i < d; ++i) {
                    c.emplace_back(static_cast<unsigned long>(v % p));
                    v /= static_cast<std::uint64_t>(p);
                }
                c.emplace_back(1);
                ModPoly g(Int(p), std::move(c));
                if (mod_monic(f, g).is_zero()) {
                    pattern.add(static_cast<int>(d));
                    f = div_monic(f, g);
                    split = true;
                }
            }
        }
        if (!split) {
            pattern.add(static_cast<int>(f.degree()));
            break;
        }
    }
    return pattern;
}

}  // namespace

TEST_CASE("reduce_mod") {
    IntPoly f(std::vector<Int>{Int(-1), Int(0), Int(1)});  // x^2 - 1
    ModPoly r = reduce_mod(f, 2);
    CHECK(r == mp(2, {1, 0, 1}));
    CHECK(r.degree() == 2);
    // reduce of an already-reduced lift is the identity
    ModPoly again(Int(2), {Int(1), Int(0), Int(1)});
    CHECK(again == r);
}

TEST_CASE("arithmetic requires equal moduli") {
    CHECK_THROWS_AS(mp(5, {1, 1}) + mp(7, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gcd_mod(mp(5, {1, 1}), mp(7, {1, 1})), std::invalid_argument);
}

TEST_CASE("pow_x_mod basics") {
    ModPoly P = mp(3, {1, 0, 1});  // x^2 + 1 over F_3
    CHECK(pow_x_mod(Int(1), P) == ModPoly::x(Int(3)));
    CHECK(pow_x_mod(Int(3), P) == mp(3, {0, 2}));  // x^3 = -x = 2x
    CHECK(pow_x_mod(Int(0), P) == ModPoly::constant(Int(3), 1));
}

TEST_CASE("pow_x_mod matches naive repeated multiplication") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        long p = (iter % 2) ? 5 : 13;
        int deg = 2 + static_cast<int>(rng() % 5);
        ModPoly P = random_poly(rng, p, deg, true);
        std::uint64_t e = rng() % 13;
        CHECK(pow_x_mod(Int(static_cast<unsigned long>(e)), P) == pow_x_naive(e, P));
    }
}

TEST_CASE("pow_mod composes with itself like iterated Frobenius") {
    // x^(p*p) two ways: direct exponent and composition of x^p with itself
    std::mt19937_64 rng(55);
    for (long p : {3l, 5l, 11l}) {
        ModPoly P = random_poly(rng, p, 6, true);
        ModPoly xp = pow_x_mod(Int(p), P);
        ModPoly via_compose = compose_mod(xp, xp, P);
        ModPoly direct = pow_x_mod(Int(p * p), P);
        CHECK(via_compose == direct);
    }
}

TEST_CASE("gcd_mod basics") {
    ModPoly f = mp(5, {2, 0, 4});
    CHECK(gcd_mod(f, ModPoly(Int(5))) == f.make_monic());
    // gcd(x^2-1, x-1) = x-1 = x+4 over F_5
    CHECK(gcd_mod(mp(5, {4, 0, 1}), mp(5, {4, 1})) == mp(5, {4, 1}));
}

TEST_CASE("gcd_mod of common-multiple products is divisible by the factor") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        long p = 11;
        ModPoly f = random_poly(rng, p, 1 + static_cast<int>(rng() % 3), false);
        ModPoly g = random_poly(rng, p, 1 + static_cast<int>(rng() % 3), false);
        ModPoly h = random_poly(rng, p, 1 + static_cast<int>(rng() % 3), false);
        if (gcd_mod(g, h).degree() != 0) continue;  // want coprime cofactors
        ModPoly d = gcd_mod(f * g, f * h);
        CHECK(mod_monic(d, f.make_monic()).is_zero());
        CHECK(d == f.make_monic() * gcd_mod(g, h));
    }
}

TEST_CASE("is_squarefree_mod") {
    CHECK_FALSE(is_squarefree_mod(mp(3, {0, 0, 1})));  // x^2
    CHECK(is_squarefree_mod(mp(3, {1, 0, 1})));        // x^2 + 1 irreducible
    CHECK_THROWS_AS(is_squarefree_mod(ModPoly(Int(3))), std::invalid_argument);

    // agrees with p not dividing disc, for random monic f over small p
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 80; ++iter) {
        long p = (iter % 2) ? 3 : 7;
        int deg = 2 + static_cast<int>(rng() % 4);
        std::vector<Int> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5);
        c.emplace_back(1);
        IntPoly f(std::move(c));
        Int disc = modgal::discriminant(f);
        bool sf = is_squarefree_mod(reduce_mod(f, Int(p)));
        CHECK(sf == (disc % p != 0));
    }
}

TEST_CASE("ddf_pattern basics") {
    CHECK(ddf_pattern(mp(5, {1, 0, 1})) == CycleType{1, 1});  // roots 2, 3
    CHECK(ddf_pattern(mp(3, {1, 0, 1})) == CycleType{2});
    CHECK_THROWS_AS(ddf_pattern(mp(3, {0, 0, 1})), std::invalid_argument);
    CHECK(ddf_pattern(mp(7, {3, 1})) == CycleType{1});
}

TEST_CASE("ddf_pattern matches the root-count oracle") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 60) {
        long p = (done % 3 == 0) ? 3 : ((done % 3 == 1) ? 11 : 101);
        int deg = 2 + static_cast<int>(rng() % 8);
        ModPoly P = random_poly(rng, p, deg, true);
        if (!is_squarefree_mod(P)) continue;
        CycleType got = ddf_pattern(P);
        CHECK(got.sum() == P.degree());
        CHECK(got == pattern_by_root_counts(P));
        ++done;
    }
}

TEST_CASE("ddf_pattern matches exhaustive factorization for tiny fields") {
    std::mt19937_64 rng(19);
    int done = 0;
    while (done < 40) {
        long p = (done % 2) ? 3 : 5;
        int deg = 2 + static_cast<int>(rng() % 5);
        ModPoly P = random_poly(rng, p, deg, true);
        if (!is_squarefree_mod(P)) continue;
        CHECK(ddf_pattern(P) == pattern_exhaustive(P));
        ++done;
    }
}

TEST_CASE("splitting_test") {
    // pattern {2}: true
    CHECK(splitting_test(mp(3, {1, 0, 1})));
    // pattern {1,1}: x^p = x, so false
    CHECK_FALSE(splitting_test(mp(5, {1, 0, 1})));
    CHECK_THROWS_AS(splitting_test(mp(3, {0, 0, 1})), std::invalid_argument);

    // equivalent to: parts within {1,2} and at least one 2
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 60) {
        long p = (done % 2) ? 7 : 13;
        int deg = 2 + static_cast<int>(rng() % 6);
        ModPoly P = random_poly(rng, p, deg, true);
        if (!is_squarefree_mod(P)) continue;
        CHECK(splitting_test(P) == ddf_pattern(P).is_one_two_with_two());
        ++done;
    }
}
