#include <doctest.h>

#include <random>

#include "btfp/oracle.hpp"

using namespace btfp;

TEST_CASE("oracle determinant basics") {
    PrimeField f5(5);
    CHECK(oracle::det(DenseMatrix::identity(f5, 3)) == 1);

    PrimeField f2(2);
    DenseMatrix equal_rows(f2, 2, 2);
    equal_rows.at(0, 0) = equal_rows.at(0, 1) = equal_rows.at(1, 0) = equal_rows.at(1, 1) = 1;
    CHECK(oracle::det(equal_rows) == 0);

    BandSpec tri(PrimeField(3), 1, {1, 2, 1});
    CHECK(oracle::det(materialize(tri, 4)) == 2);  // continuant: 5 mod 3

    CHECK_THROWS_AS(oracle::det(DenseMatrix(f5, 2, 3)), Error);
}

TEST_CASE("oracle inverse basics") {
    PrimeField f5(5);
    CHECK(oracle::inverse(DenseMatrix::identity(f5, 4)).is_identity());

    DenseMatrix twos(f5, 2, 2);
    twos.at(0, 0) = twos.at(1, 1) = 2;
    DenseMatrix inv = oracle::inverse(twos);
    CHECK(inv.at(0, 0) == 3);
    CHECK(inv.at(1, 1) == 3);
    CHECK(inv.at(0, 1) == 0);

    BandSpec tri(PrimeField(3), 1, {1, 2, 1});
    DenseMatrix tri_inv = oracle::inverse(materialize(tri, 4));
    CHECK(tri_inv.at(0, 0) == 2);
    CHECK(tri_inv.at(0, 1) == 0);
    CHECK(tri_inv.at(0, 2) == 1);
    CHECK(tri_inv.at(0, 3) == 1);  // rational row (4/5, -3/5, 2/5, -1/5) mod 3

    PrimeField f2(2);
    DenseMatrix singular(f2, 2, 2);
    singular.at(0, 0) = singular.at(0, 1) = singular.at(1, 0) = singular.at(1, 1) = 1;
    CHECK_THROWS_AS(oracle::inverse(singular), Error);
}

TEST_CASE("oracle inverse times input is the identity for random nonsingular matrices") {
    std::mt19937_64 rng(61);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField field(p);
        int done = 0;
        while (done < 100) {
            std::size_t n = 1 + rng() % 6;
            DenseMatrix m(field, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
            if (oracle::det(m) == 0) continue;
            CHECK(mat_mul(oracle::inverse(m), m).is_identity());
            ++done;
        }
    }
}

TEST_CASE("oracle polynomial period") {
    PrimeField f2(2);
    CHECK(oracle::poly_period(Poly(f2, {1, 1, 1, 1, 1}), 15) == 5);
    CHECK(oracle::poly_period(Poly(f2, {1, 1}), 1) == 1);
    CHECK(oracle::poly_period(Poly(f2, {1, 1, 0, 1, 1}), 15) == 6);
    CHECK_THROWS_AS(oracle::poly_period(Poly(f2, {1, 1, 0, 1, 1}), 5), Error);  // bound too small
    CHECK_THROWS_AS(oracle::poly_period(Poly(f2, {0, 1}), 4), Error);           // f(0) = 0
}

TEST_CASE("oracle shift-matrix period") {
    CHECK(oracle::shift_period(BandSpec(PrimeField(2), 2, {1, 1, 1, 1, 1}), 15) == 5);
    CHECK(oracle::shift_period(BandSpec(PrimeField(3), 1, {1, 2, 1}), 8) == 6);
    CHECK(oracle::shift_period(BandSpec(PrimeField(2), 2, {1, 1, 0, 1, 1}), 15) == 6);
}
