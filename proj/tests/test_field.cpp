/*
   Copyright 2026 the grslib authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include "doctest.h"
#include "grs/field.hpp"

using grs::Field;

TEST_CASE("prime field construction and basic inverses") {
    Field f(17);
    CHECK(f.q() == 17);
    CHECK(f.inv(1) == 1);
    CHECK(f.inv(2) == 9);  // 2 * 9 = 18 = 1 mod 17
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(Field(15), std::invalid_argument);
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
}

TEST_CASE("extension field construction") {
    Field f4(2, 2, {1, 1, 1});  // x^2 + x + 1
    CHECK(f4.q() == 4);
    // x^2 + 1 = (x + 1)^2 over GF(2) is reducible
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 2, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 17, {}), std::invalid_argument);  // q > 2^16

    Field f32(2, 5, {1, 0, 1, 0, 0, 1});  // x^5 + x^2 + 1
    CHECK(f32.q() == 32);
    Field f9(3, 2, {1, 0, 1});  // x^2 + 1 over GF(3)
    CHECK(f9.q() == 9);
}

TEST_CASE("prime field arithmetic agrees with integers mod p") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
        Field f(p);
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == a * b % p);
                CHECK(f.sub(a, b) == (a + p - b) % p);
            }
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (const Field& f : {Field(17), Field(2, 5, {1, 0, 1, 0, 0, 1}),
                           Field(3, 2, {1, 0, 1})}) {
        std::uniform_int_distribution<uint32_t> el(0, f.q() - 1);
        for (int i = 0; i < 200; ++i) {
            const uint32_t a = el(rng), b = el(rng), c = el(rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("multiplicative group order") {
    for (const Field& f : {Field(17), Field(2, 5, {1, 0, 1, 0, 0, 1}),
                           Field(3, 2, {1, 0, 1}), Field(61)}) {
        for (uint32_t a = 1; a < f.q(); ++a)
            CHECK(f.pow(a, (int64_t)f.q() - 1) == 1);
        // generator hits every nonzero element
        std::vector<bool> seen(f.q(), false);
        for (uint32_t i = 0; i + 1 < f.q(); ++i) seen[f.gen_pow(i)] = true;
        for (uint32_t a = 1; a < f.q(); ++a) CHECK(seen[a]);
    }
}

TEST_CASE("negative and large exponents") {
    Field f(17);
    CHECK(f.pow(2, -1) == f.inv(2));
    CHECK(f.pow(3, 16) == 1);
    CHECK(f.pow(3, -16) == 1);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    CHECK_THROWS_AS(f.pow(0, -1), std::domain_error);
}

TEST_CASE("binomial coefficients by Lucas") {
    // reference: Pascal triangle reduced mod p
    for (uint32_t p : {2u, 3u, 17u}) {
        Field f(p);
        std::vector<std::vector<uint64_t>> pascal(20, std::vector<uint64_t>(20, 0));
        for (size_t i = 0; i < 20; ++i) {
            pascal[i][0] = 1;
            for (size_t j = 1; j <= i; ++j)
                pascal[i][j] = pascal[i - 1][j - 1] + (j <= i - 1 ? pascal[i - 1][j] : 0);
        }
        for (size_t i = 0; i < 20; ++i)
            for (size_t j = 0; j < 20; ++j)
                CHECK(f.binom(i, j) == pascal[i][j] % p);
    }
}

TEST_CASE("element range checking") {
    Field f(17);
    CHECK_THROWS_AS(f.add(17, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.mul(0, 200), std::invalid_argument);
}

TEST_CASE("field element wrapper rejects mixed fields") {
    Field a(17), b(17);
    grs::FieldElement x(a, 3), y(b, 4);
    CHECK_THROWS_AS(x + y, std::invalid_argument);
    grs::FieldElement z(a, 4);
    CHECK((x * z).value() == 12);
    CHECK((x - z).value() == 16);
    CHECK(z.inverse().value() == 13);
}
