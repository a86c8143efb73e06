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
#include "grs/code.hpp"

using grs::Field;
using grs::GrsCode;
using grs::UniPoly;

TEST_CASE("construction validation") {
    Field f(17);
    std::vector<uint32_t> alphas{1, 2, 3, 4}, ones{1, 1, 1, 1};
    CHECK_NOTHROW(GrsCode(f, 2, alphas, ones));
    CHECK_THROWS_AS(GrsCode(f, 0, alphas, ones), std::invalid_argument);
    CHECK_THROWS_AS(GrsCode(f, 5, alphas, ones), std::invalid_argument);
    CHECK_THROWS_AS(GrsCode(f, 2, {1, 2, 2, 4}, ones), std::invalid_argument);
    CHECK_THROWS_AS(GrsCode(f, 2, {0, 2, 3, 4}, ones), std::invalid_argument);
    CHECK_THROWS_AS(GrsCode(f, 2, alphas, {1, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GrsCode(f, 2, alphas, {1, 1, 1}), std::invalid_argument);
    // length n = q - 1 is the maximum; q is impossible with nonzero locators
    std::vector<uint32_t> all(16), vp(16, 1);
    for (uint32_t i = 0; i < 16; ++i) all[i] = i + 1;
    CHECK_NOTHROW(GrsCode(f, 4, all, vp));
}

TEST_CASE("paper instance basics") {
    Field f(17);
    GrsCode code = GrsCode::primitive(f, 4);
    CHECK(code.n() == 16);
    CHECK(code.k() == 4);
    CHECK(code.d() == 13);
    // locator polynomial over all nonzero elements is x^16 - 1
    std::vector<uint32_t> expect(17, 0);
    expect[0] = 16;
    expect[16] = 1;
    CHECK(code.locator_poly() == UniPoly(f, expect));
    for (uint32_t a : code.alphas()) CHECK(code.locator_poly().eval(a) == 0);
}

TEST_CASE("dual multipliers") {
    Field f(17);
    GrsCode tiny(f, 1, {1, 2}, {1, 1});
    CHECK(tiny.dual_multipliers()[0] == 16);  // 1/(1-2) = -1
    CHECK(tiny.dual_multipliers()[1] == 1);   // 1/(2-1)

    GrsCode code = GrsCode::primitive(f, 4);
    const auto& v = code.dual_multipliers();
    for (size_t j = 0; j + 1 < code.n(); ++j) {
        uint32_t acc = 0;
        for (size_t i = 0; i < code.n(); ++i) {
            uint32_t term = f.mul(code.vprimes()[i], v[i]);
            acc = f.add(acc, f.mul(term, f.pow(code.alphas()[i], (int64_t)j)));
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("dual multipliers scale inversely") {
    Field f(17);
    GrsCode a(f, 2, {1, 2, 3, 4}, {1, 1, 1, 1});
    GrsCode b(f, 2, {1, 2, 3, 4}, {5, 5, 5, 5});
    for (size_t i = 0; i < 4; ++i)
        CHECK(b.dual_multipliers()[i] == f.div(a.dual_multipliers()[i], 5));
}

TEST_CASE("encode and unencode") {
    Field f(17);
    GrsCode code = GrsCode::primitive(f, 4);
    CHECK(code.encode(std::vector<uint32_t>{0, 0, 0, 0}) ==
          std::vector<uint32_t>(16, 0));
    CHECK(code.encode(std::vector<uint32_t>{7, 0, 0, 0}) ==
          std::vector<uint32_t>(16, 7));

    std::mt19937 rng(21);
    std::uniform_int_distribution<uint32_t> el(0, 16);
    for (int t = 0; t < 50; ++t) {
        std::vector<uint32_t> msg(4);
        for (auto& m : msg) m = el(rng);
        std::vector<uint32_t> word = code.encode(msg);
        UniPoly poly(f, msg);
        for (size_t i = 0; i < 16; ++i)
            CHECK(word[i] == poly.eval(code.alphas()[i]));
        auto [ok, back] = code.unencode(word);
        CHECK(ok);
        CHECK(back == poly);
        CHECK(code.is_codeword(word));
        word[3] = f.add(word[3], 1);
        CHECK_FALSE(code.is_codeword(word));
    }
    CHECK_THROWS_AS(code.encode(std::vector<uint32_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("minimum distance exhaustively on a small code") {
    Field f(11);
    GrsCode code(f, 3, {1, 2, 3, 4, 5, 6, 7, 8}, std::vector<uint32_t>(8, 1));
    std::vector<std::vector<uint32_t>> words;
    for (uint32_t a = 0; a < 11; ++a)
        for (uint32_t b = 0; b < 11; ++b)
            for (uint32_t c = 0; c < 11; ++c)
                words.push_back(code.encode(std::vector<uint32_t>{a, b, c}));
    size_t min_d = 99;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            min_d = std::min(min_d, grs::hamming_distance(words[i], words[j]));
    CHECK(min_d == code.d());
}
