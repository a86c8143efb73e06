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
#include "grs/bipoly.hpp"

using grs::BiPoly;
using grs::Field;
using grs::UniPoly;

namespace {

BiPoly random_bipoly(const Field& f, std::mt19937& rng, size_t xdeg, size_t ydeg) {
    std::uniform_int_distribution<uint32_t> el(0, f.q() - 1);
    std::vector<UniPoly> rows;
    for (size_t j = 0; j <= ydeg; ++j) {
        std::vector<uint32_t> cs(xdeg + 1);
        for (auto& c : cs) c = el(rng);
        rows.emplace_back(f, cs);
    }
    return BiPoly(f, rows);
}

}  // namespace

TEST_CASE("construction and evaluation") {
    Field f(17);
    BiPoly q = BiPoly::monomial(f, 3, 2, 1);  // 3 x^2 y
    CHECK(q.coeff(2, 1) == 3);
    CHECK(q.x_degree() == 2);
    CHECK(q.y_degree() == 1);
    CHECK(q.eval(2, 5) == f.mul(3, f.mul(4, 5)));
    CHECK(BiPoly(f).is_zero());
    CHECK(BiPoly(f, {UniPoly(f), UniPoly(f)}).is_zero());
}

TEST_CASE("arithmetic against pointwise evaluation") {
    Field f(17);
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        BiPoly a = random_bipoly(f, rng, 4, 3), b = random_bipoly(f, rng, 3, 2);
        for (int pts = 0; pts < 20; ++pts) {
            std::uniform_int_distribution<uint32_t> el(0, 16);
            const uint32_t x = el(rng), y = el(rng);
            CHECK((a + b).eval(x, y) == f.add(a.eval(x, y), b.eval(x, y)));
            CHECK((a - b).eval(x, y) == f.sub(a.eval(x, y), b.eval(x, y)));
            CHECK((a * b).eval(x, y) == f.mul(a.eval(x, y), b.eval(x, y)));
        }
    }
}

TEST_CASE("hasse derivative basics") {
    Field f(17);
    // d/dy of y^2 in Hasse form: C(2,1) y = 2y
    BiPoly y2 = BiPoly::monomial(f, 1, 0, 2);
    CHECK(y2.hasse_derivative(0, 1) == BiPoly::monomial(f, 2, 0, 1));
    // order-(2,0) of x^3: C(3,2) x = 3x
    BiPoly x3 = BiPoly::monomial(f, 1, 3, 0);
    CHECK(x3.hasse_derivative(2, 0) == BiPoly::monomial(f, 3, 1, 0));
    // hasse_eval matches evaluating the derivative polynomial
    std::mt19937 rng(12);
    for (int t = 0; t < 20; ++t) {
        BiPoly a = random_bipoly(f, rng, 5, 3);
        for (size_t da = 0; da < 3; ++da)
            for (size_t db = 0; db < 3; ++db)
                for (uint32_t x = 0; x < 5; ++x)
                    CHECK(a.hasse_eval(da, db, x, x + 1) ==
                          a.hasse_derivative(da, db).eval(x, x + 1));
    }
}

TEST_CASE("hasse composition in x") {
    Field f(17);
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        BiPoly a = random_bipoly(f, rng, 6, 2);
        for (size_t a1 = 0; a1 < 3; ++a1)
            for (size_t a2 = 0; a2 < 3; ++a2) {
                BiPoly lhs = a.hasse_derivative(a1, 0).hasse_derivative(a2, 0);
                BiPoly rhs = a.hasse_derivative(a1 + a2, 0).scaled(f.binom(a1 + a2, a1));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Taylor expansion with Hasse derivatives") {
    Field f(17);
    std::mt19937 rng(14);
    for (int t = 0; t < 20; ++t) {
        BiPoly q = random_bipoly(f, rng, 4, 4);
        UniPoly r(f, {3, 1, 5});
        // Q(x, y) = sum_b Q^[0,b](x, R(x)) (y - R(x))^b
        BiPoly y_minus_r(f, {-r, UniPoly(f, {1})});
        BiPoly acc(f);
        BiPoly pw = BiPoly::monomial(f, 1, 0, 0);
        for (size_t b = 0; b <= (size_t)q.y_degree(); ++b) {
            BiPoly coeff(f, {q.hasse_derivative(0, b).y_substituted(r)});
            acc = acc + coeff * pw;
            pw = pw * y_minus_r;
        }
        CHECK(acc == q);
    }
}

TEST_CASE("multiplicity") {
    Field f(17);
    // (y - x)^2 has a double zero along y = x
    BiPoly y_minus_x(f, {UniPoly(f, {0, 16}), UniPoly(f, {1})});
    CHECK((y_minus_x * y_minus_x).multiplicity_at(0, 0) == 2);
    CHECK((y_minus_x * y_minus_x).multiplicity_at(4, 4) == 2);
    CHECK((y_minus_x * y_minus_x).multiplicity_at(4, 5) == 0);
    CHECK(BiPoly::monomial(f, 1, 0, 0).multiplicity_at(3, 3) == 0);
    CHECK_THROWS_AS(BiPoly(f).multiplicity_at(0, 0), std::domain_error);
}

TEST_CASE("weighted degree") {
    Field f(17);
    CHECK(BiPoly::monomial(f, 1, 2, 1).wdeg(1, 3) == 5);
    CHECK(BiPoly::monomial(f, 1, 0, 0).wdeg(1, 3) == 0);
    CHECK(BiPoly(f).wdeg(1, 3) == grs::kNegInfDegree);
    BiPoly mix = BiPoly::monomial(f, 1, 5, 0) + BiPoly::monomial(f, 1, 0, 3);
    CHECK(mix.wdeg(1, 1) == 5);
    CHECK(mix.wdeg(1, 2) == 6);
}

TEST_CASE("inner product") {
    Field f(17);
    BiPoly xy = BiPoly::monomial(f, 1, 1, 1);
    CHECK(grs::inner_product(xy, xy) == 1);
    CHECK(grs::inner_product(xy, BiPoly::monomial(f, 1, 0, 1)) == 0);
    BiPoly a = BiPoly::monomial(f, 3, 1, 0) + BiPoly::monomial(f, 4, 0, 2);
    BiPoly b = BiPoly::monomial(f, 5, 1, 0) + BiPoly::monomial(f, 2, 0, 2);
    CHECK(grs::inner_product(a, b) == f.add(f.mul(3, 5), f.mul(4, 2)));
}

TEST_CASE("substitutions") {
    Field f(17);
    std::mt19937 rng(15);
    for (int t = 0; t < 20; ++t) {
        BiPoly q = random_bipoly(f, rng, 4, 3);
        UniPoly r(f, {2, 0, 7});
        // y_substituted agrees with pointwise evaluation
        for (uint32_t x = 0; x < 17; ++x)
            CHECK(q.y_substituted(r).eval(x) == q.eval(x, r.eval(x)));
        // Q(x, x*y + gamma) as a two-variable identity
        for (uint32_t gamma = 0; gamma < 5; ++gamma) {
            BiPoly sub = q.substituted_y_affine(gamma);
            for (uint32_t x = 0; x < 9; ++x)
                for (uint32_t y = 0; y < 9; ++y)
                    CHECK(sub.eval(x, y) == q.eval(x, f.add(f.mul(x, y), gamma)));
        }
    }
}

TEST_CASE("x valuation and stripping") {
    Field f(17);
    BiPoly q = BiPoly::monomial(f, 2, 3, 0) + BiPoly::monomial(f, 5, 2, 1);
    CHECK(q.x_valuation() == 2);
    BiPoly s = q.x_stripped(2);
    CHECK(s == BiPoly::monomial(f, 2, 1, 0) + BiPoly::monomial(f, 5, 0, 1));
    CHECK_THROWS_AS(q.x_stripped(3), std::invalid_argument);
    CHECK(BiPoly(f).x_valuation() == 0);
}
