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

#ifndef GRS_SYNDROMES_HPP
#define GRS_SYNDROMES_HPP

#include "grs/code.hpp"

namespace grs {

/// Classical syndromes S_i = sum_j v_j r_j alpha_j^i for i in [0, n-k),
/// where v are the dual multipliers. All zero iff the word is a codeword.
std::vector<uint32_t> classical_syndromes(const GrsCode& code,
                                          const std::vector<uint32_t>& word);

/// Lagrange polynomial of degree < n through (alpha_i, r_i / vprime_i);
/// equals the message polynomial when r is a codeword.
UniPoly received_poly(const GrsCode& code, const std::vector<uint32_t>& word);

/**
 * Generalized syndromes for list decoding with multiplicity s, list size
 * ell, and decoding radius tau.
 *
 * The interpolation system is a Block-Hankel matrix with s vertical bands
 * (band b has (s - b) * n rows) and ell + 1 horizontal bands (band t has
 * N[t] = s * (n - tau) - t * (k - 1) columns). The entry at row (b, kappa)
 * and column (t, mu) is entry(b, t, kappa + mu).
 *
 * Sequence (b, t) is stored as coefficients of the power series
 * C(t, b) * reciprocal(R)^(t-b) / reciprocal(G)^(s-b) shifted by
 * b + 1 + t*(n-1) - s*n, with indices before the start of the series
 * reading as zero. Blocks with t < b are identically zero.
 */
struct SyndromeSet {
    Field field;
    size_t n = 0, k = 0, s = 0, ell = 0, tau = 0;
    std::vector<size_t> N;                                 // columns per band t
    std::vector<std::vector<std::vector<uint32_t>>> blocks;  // [b][t]

    size_t band_rows(size_t b) const { return (s - b) * n; }

    uint32_t entry(size_t b, size_t t, size_t i) const {
        if (b >= s || t > ell) throw std::out_of_range("syndrome block index");
        const auto& blk = blocks[b][t];
        if (i >= blk.size()) throw std::out_of_range("syndrome coefficient index");
        return blk[i];
    }

    /// Matrix entry of block (b, t) at row i, column j without materializing
    /// the matrix; blocks with t < b are zero.
    uint32_t hankel_entry(size_t b, size_t t, size_t i, size_t j) const {
        if (b >= s || t > ell || i >= band_rows(b) || j >= N[t])
            throw std::out_of_range("block matrix index");
        return entry(b, t, i + j);
    }
};

SyndromeSet gs_syndromes(const GrsCode& code, const std::vector<uint32_t>& word,
                         size_t s, size_t ell, size_t tau);

/// Multiplicity-one case (a horizontal band of Hankel blocks).
SyndromeSet sudan_syndromes(const GrsCode& code, const std::vector<uint32_t>& word,
                            size_t ell, size_t tau);

}  // namespace grs

#endif
