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

#include "grs/syndromes.hpp"

namespace grs {

namespace {

// Extra trailing coefficients kept per block beyond what the matrix itself
// addresses, so that candidate solutions whose x-support was shifted past
// the last matrix column can still be checked against the sequence.
constexpr size_t kMargin = 8;

}  // namespace

std::vector<uint32_t> classical_syndromes(const GrsCode& code,
                                          const std::vector<uint32_t>& word) {
    const Field& f = code.field();
    if (word.size() != code.n())
        throw std::invalid_argument("word length does not match code length");
    const auto& duals = code.dual_multipliers();
    std::vector<uint32_t> syn(code.n() - code.k(), 0);
    for (size_t i = 0; i < syn.size(); ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < code.n(); ++j) {
            uint32_t t = f.mul(duals[j], word[j]);
            acc = f.add(acc, f.mul(t, f.pow(code.alphas()[j], (int64_t)i)));
        }
        syn[i] = acc;
    }
    return syn;
}

UniPoly received_poly(const GrsCode& code, const std::vector<uint32_t>& word) {
    const Field& f = code.field();
    if (word.size() != code.n())
        throw std::invalid_argument("word length does not match code length");
    std::vector<std::pair<uint32_t, uint32_t>> pts(code.n());
    for (size_t i = 0; i < code.n(); ++i)
        pts[i] = {code.alphas()[i], f.div(word[i], code.vprimes()[i])};
    return UniPoly::lagrange(f, pts);
}

SyndromeSet gs_syndromes(const GrsCode& code, const std::vector<uint32_t>& word,
                         size_t s, size_t ell, size_t tau) {
    const Field& f = code.field();
    const size_t n = code.n(), k = code.k();
    if (s < 1 || ell < s) throw std::invalid_argument("need 1 <= s <= ell");
    if (tau >= n) throw std::invalid_argument("radius too large for these parameters");

    SyndromeSet set;
    set.field = f;
    set.n = n;
    set.k = k;
    set.s = s;
    set.ell = ell;
    set.tau = tau;
    set.N.resize(ell + 1);
    for (size_t t = 0; t <= ell; ++t) {
        const long nt = (long)(s * (n - tau)) - (long)(t * (k - 1));
        if (nt < 1)
            throw std::invalid_argument("radius too large for these parameters");
        set.N[t] = (size_t)nt;
    }

    const UniPoly rbar = received_poly(code, word).reciprocal(n);
    const UniPoly gbar = code.locator_poly().reciprocal(n + 1);

    set.blocks.assign(s, std::vector<std::vector<uint32_t>>(ell + 1));
    for (size_t b = 0; b < s; ++b) {
        for (size_t t = 0; t <= ell; ++t) {
            const size_t len = set.band_rows(b) + set.N[t] + kMargin;
            auto& blk = set.blocks[b][t];
            blk.assign(len, 0);
            if (t < b) continue;
            const uint32_t cb = f.binom(t, b);
            if (cb == 0) continue;

            const long shift = (long)(b + 1) + (long)(t * (n - 1)) - (long)(s * n);
            const long top = (long)len + shift;  // series terms needed
            if (top <= 0) continue;
            UniPoly num = rbar.pow((uint32_t)(t - b)).truncated((size_t)top);
            UniPoly series =
                UniPoly::series_div(num, gbar.pow((uint32_t)(s - b)), (size_t)top);
            for (size_t i = 0; i < len; ++i) {
                const long src = (long)i + shift;
                if (src >= 0) blk[i] = f.mul(cb, series.coeff((size_t)src));
            }
        }
    }
    return set;
}

SyndromeSet sudan_syndromes(const GrsCode& code, const std::vector<uint32_t>& word,
                            size_t ell, size_t tau) {
    return gs_syndromes(code, word, 1, ell, tau);
}

}  // namespace grs
