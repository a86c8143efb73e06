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

#ifndef GRS_DECODER_HPP
#define GRS_DECODER_HPP

#include "grs/fia.hpp"

namespace grs {

/// Requested decoding radius cannot be met by any supported parameter
/// choice (distinct from malformed input).
class infeasible_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct DecodeParams {
    size_t s = 0;    // interpolation multiplicity
    size_t ell = 0;  // list size (max y-degree)
    size_t tau = 0;  // decoding radius
    std::vector<size_t> N;  // per-y-degree coefficient budgets
};

/// Smallest multiplicity s (then smallest list size ell) such that the
/// column budget N_t = s*(n - tau) - t*(k - 1) stays positive up to ell
/// and exceeds the C(s+1,2)*n interpolation constraints in total.
/// Throws infeasible_error if no s up to kMaxMultiplicity works.
DecodeParams params_for(const GrsCode& code, size_t tau);

inline constexpr size_t kMaxMultiplicity = 16;

struct BmdResult {
    bool ok = false;
    std::vector<uint32_t> codeword;
    std::vector<FiaTraceRow> trace;
};

/// Bounded-minimum-distance decoding: corrects up to (n-k)/2 errors via
/// the classical key equation; ok = false when the error is heavier.
BmdResult decode_bmd(const GrsCode& code, const std::vector<uint32_t>& r);

struct InterpolateResult {
    BiPoly Q;
    std::vector<FiaTraceRow> trace;
};

/// Interpolation polynomial Q with a zero of multiplicity >= s at every
/// (alpha_i, r_i / vprime_i) and (1, k-1)-weighted degree < s*(n - tau).
InterpolateResult interpolate(const GrsCode& code, const std::vector<uint32_t>& r,
                              const DecodeParams& params);

/// All f with deg f < k and Q(x, f(x)) = 0, by recursive root-finding
/// on the constant-in-x slice (y-roots of degree >= k are dropped).
std::vector<UniPoly> find_y_roots(const BiPoly& q, size_t k);

struct Candidate {
    UniPoly message;
    std::vector<uint32_t> codeword;
    size_t distance = 0;
};

struct ListDecodeResult {
    DecodeParams params;
    BiPoly Q;
    std::vector<Candidate> candidates;  // each within distance tau, distinct
    std::vector<FiaTraceRow> trace;
};

ListDecodeResult list_decode(const GrsCode& code, const std::vector<uint32_t>& r,
                             size_t tau);

}  // namespace grs

#endif
