#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "voaf/cyclotomic.hpp"

using namespace voaf;

namespace {

Cyclotomic random_elem(const CycloFieldPtr& f, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::map<long, Rational> coeffs;
    for (long i = 0; i < f->degree(); ++i) {
        if (rng() % 2 == 0) continue;
        Rational c = rat(num(rng), den(rng));
        if (!is_zero(c)) coeffs[i] = c;
    }
    return Cyclotomic(f, std::move(coeffs));
}

} // namespace

TEST_CASE("zeta basics") {
    auto f = make_cyclo_field(12);
    CHECK(f->degree() == 4);
    CHECK(f->zeta(12) == f->one());
    CHECK(f->zeta(0) == f->one());
    CHECK(f->zeta(-1) == f->zeta(11));

    auto f4 = make_cyclo_field(4);
    CHECK(f4->zeta(2) == f4->from_rational(rat(-1)));

    // zeta_3^2 reduces to -1 - zeta_3 in the power basis
    auto f3 = make_cyclo_field(3);
    Cyclotomic expect = f3->from_rational(rat(-1)) - f3->zeta(1);
    CHECK(f3->zeta(2) == expect);
}

TEST_CASE("phase") {
    auto f = make_cyclo_field(8);
    CHECK(f->phase(rat(0)) == f->one());
    CHECK(f->phase(rat(1, 2)) == f->from_rational(rat(-1)));
    CHECK(f->phase(rat(1, 4)) == f->zeta(2));
    // i^2 = -1 in the reduced basis
    CHECK(f->zeta(2) * f->zeta(2) == f->from_rational(rat(-1)));
    CHECK_THROWS_WITH_AS(f->phase(rat(1, 3)), doctest::Contains("DenominatorNotSupported"), Error);
}

TEST_CASE("phase is a homomorphism and zeta inverses pair up") {
    auto f = make_cyclo_field(20);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-30, 30);
    for (int t = 0; t < 200; ++t) {
        Rational p = rat(num(rng), 20);
        Rational q = rat(num(rng), 20);
        CHECK(f->phase(p) * f->phase(q) == f->phase(p + q));
    }
    for (long j = 0; j <= 20; ++j) CHECK(f->zeta(j) * f->zeta(20 - j) == f->one());
}

TEST_CASE("field laws on randomized triples") {
    for (long order : {5L, 8L, 9L, 12L, 16L}) {
        auto f = make_cyclo_field(order);
        std::mt19937 rng(42 + static_cast<unsigned>(order));
        for (int t = 0; t < 60; ++t) {
            Cyclotomic a = random_elem(f, rng);
            Cyclotomic b = random_elem(f, rng);
            Cyclotomic c = random_elem(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
        }
    }
}

TEST_CASE("inverse of roots and mixed elements") {
    auto f = make_cyclo_field(7);
    for (long j = 1; j < 7; ++j) {
        Cyclotomic z = f->zeta(j);
        CHECK(z * z.inverse() == f->one());
    }
    Cyclotomic mixed = f->one() + f->zeta(1).scale(rat(2)) - f->zeta(3).scale(rat(1, 5));
    CHECK(mixed * mixed.inverse() == f->one());
}

TEST_CASE("rational detection and zero handling") {
    auto f = make_cyclo_field(6);
    Cyclotomic z = f->zeta(1);
    // zeta_6 satisfies x^2 - x + 1 = 0, so zeta + zeta^5 = 1
    CHECK((z + f->zeta(5)).is_rational());
    CHECK((z + f->zeta(5)).as_rational() == 1);
    Cyclotomic zero = z - z;
    CHECK(zero.is_zero());
    CHECK(zero + f->one() == f->one());
    CHECK(zero * z == Cyclotomic());
    CHECK(Cyclotomic().str() == "0");
}

TEST_CASE("pow and rendering") {
    auto f = make_cyclo_field(5);
    CHECK(f->zeta(1).pow(5) == f->one());
    CHECK(f->zeta(1).pow(-1) == f->zeta(4));
    CHECK(f->from_rational(rat(3, 2)).str() == "3/2");
    CHECK(f->zeta(2).str() == "zeta(2)");
}
