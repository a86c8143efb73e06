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

#include "grs/code.hpp"

namespace grs {

GrsCode::GrsCode(Field f, size_t k, std::vector<uint32_t> alphas,
                 std::vector<uint32_t> vprimes)
    : f_(std::move(f)),
      k_(k),
      alphas_(std::move(alphas)),
      vprimes_(std::move(vprimes)),
      locator_(f_) {
    const size_t n = alphas_.size();
    if (n == 0 || n >= f_.q())
        throw std::invalid_argument("code length must be in [1, q-1]");
    if (k_ < 1 || k_ > n) throw std::invalid_argument("dimension must be in [1, n]");
    if (vprimes_.size() != n)
        throw std::invalid_argument("multiplier count does not match length");
    for (uint32_t a : alphas_)
        if (a == 0 || a >= f_.q())
            throw std::invalid_argument("locators must be nonzero field elements");
    for (uint32_t v : vprimes_)
        if (v == 0 || v >= f_.q())
            throw std::invalid_argument("column multipliers must be nonzero");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (alphas_[i] == alphas_[j])
                throw std::invalid_argument("locators must be distinct");

    locator_ = UniPoly::constant(f_, 1);
    for (uint32_t a : alphas_) locator_ = locator_ * UniPoly(f_, {f_.neg(a), 1});

    duals_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t prod = vprimes_[i];
        for (size_t j = 0; j < n; ++j)
            if (j != i) prod = f_.mul(prod, f_.sub(alphas_[i], alphas_[j]));
        duals_[i] = f_.inv(prod);
    }
}

GrsCode GrsCode::primitive(const Field& f, size_t k) {
    const size_t n = f.q() - 1;
    std::vector<uint32_t> alphas(n), vprimes(n, 1);
    for (size_t i = 0; i < n; ++i) alphas[i] = f.gen_pow((uint32_t)i);
    return GrsCode(f, k, std::move(alphas), std::move(vprimes));
}

std::vector<uint32_t> GrsCode::encode(const std::vector<uint32_t>& message) const {
    if (message.size() != k_)
        throw std::invalid_argument("message length does not match dimension");
    return encode(UniPoly(f_, message));
}

std::vector<uint32_t> GrsCode::encode(const UniPoly& message) const {
    if (message.degree() >= (int)k_)
        throw std::invalid_argument("message degree too large");
    std::vector<uint32_t> word(n());
    for (size_t i = 0; i < n(); ++i)
        word[i] = f_.mul(vprimes_[i], message.eval(alphas_[i]));
    return word;
}

std::pair<bool, UniPoly> GrsCode::unencode(const std::vector<uint32_t>& word) const {
    if (word.size() != n())
        throw std::invalid_argument("word length does not match code length");
    std::vector<std::pair<uint32_t, uint32_t>> pts(n());
    for (size_t i = 0; i < n(); ++i)
        pts[i] = {alphas_[i], f_.div(word[i], vprimes_[i])};
    UniPoly f = UniPoly::lagrange(f_, pts);
    if (f.degree() >= (int)k_) return {false, UniPoly(f_)};
    return {true, f};
}

size_t hamming_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace grs
