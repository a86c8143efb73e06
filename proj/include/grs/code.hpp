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

#ifndef GRS_CODE_HPP
#define GRS_CODE_HPP

#include "grs/unipoly.hpp"

namespace grs {

/**
 * A generalized Reed-Solomon code GRS(n, k) over GF(q) with distinct
 * nonzero locators alpha_i and nonzero column multipliers vprime_i.
 * Codewords are (vprime_0 f(alpha_0), ..., vprime_{n-1} f(alpha_{n-1}))
 * for message polynomials f of degree < k.
 */
class GrsCode {
   public:
    GrsCode(Field f, size_t k, std::vector<uint32_t> alphas,
            std::vector<uint32_t> vprimes);

    /// Code of length q - 1 with locators g^0, ..., g^{n-2} for the field
    /// generator g and all column multipliers equal to one.
    static GrsCode primitive(const Field& f, size_t k);

    const Field& field() const { return f_; }
    size_t n() const { return alphas_.size(); }
    size_t k() const { return k_; }
    size_t d() const { return n() - k_ + 1; }
    const std::vector<uint32_t>& alphas() const { return alphas_; }
    const std::vector<uint32_t>& vprimes() const { return vprimes_; }

    /// Multipliers v_i of the dual code, v_i = 1 / (vprime_i *
    /// prod_{j != i} (alpha_i - alpha_j)). They satisfy
    /// sum_i vprime_i v_i alpha_i^t = 0 for t = 0, ..., n-2.
    const std::vector<uint32_t>& dual_multipliers() const { return duals_; }

    /// G(x) = prod_i (x - alpha_i).
    const UniPoly& locator_poly() const { return locator_; }

    std::vector<uint32_t> encode(const std::vector<uint32_t>& message) const;
    std::vector<uint32_t> encode(const UniPoly& message) const;

    /// Message polynomial of a codeword, or failure if the word is not in
    /// the code.
    std::pair<bool, UniPoly> unencode(const std::vector<uint32_t>& word) const;

    bool is_codeword(const std::vector<uint32_t>& word) const {
        return unencode(word).first;
    }

   private:
    Field f_;
    size_t k_ = 0;
    std::vector<uint32_t> alphas_, vprimes_, duals_;
    UniPoly locator_;
};

/// Number of positions where a and b differ; sizes must match.
size_t hamming_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

}  // namespace grs

#endif
