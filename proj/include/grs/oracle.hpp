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

#ifndef GRS_ORACLE_HPP
#define GRS_ORACLE_HPP

#include "grs/decoder.hpp"

namespace grs {
namespace oracle {

/**
 * Dense interpolation constraint system built directly from the Hasse
 * derivative conditions, bypassing the syndrome machinery entirely.
 * One row per (point i, derivative order (a, b)) with a + b < s; one
 * column per coefficient Q_mu^(nu), mu < N[nu], in OrderH column order.
 */
struct ConstraintMatrix {
    Field field;
    OrderH order;
    std::vector<std::vector<uint32_t>> rows;

    /// Bivariate polynomial of a null-space (or any coefficient) vector,
    /// columns mapped back through the order.
    BiPoly to_bipoly(const std::vector<uint32_t>& flat) const;

    /// Coefficients of q flattened in column order; rejects q outside
    /// the per-row degree budgets.
    std::vector<uint32_t> flatten(const BiPoly& q) const;
};

ConstraintMatrix build_constraints(const GrsCode& code, const std::vector<uint32_t>& r,
                                   const DecodeParams& params);

/// Basis of the right null space by Gaussian elimination with
/// first-nonzero pivoting; deterministic.
std::vector<std::vector<uint32_t>> nullspace(const Field& f,
                                             const std::vector<std::vector<uint32_t>>& m);

struct VerifyResult {
    bool pass = false;
    std::string violation;  // empty when pass
};

/// Checks Q != 0, multiplicity >= s at every (alpha_i, r_i / vprime_i)
/// by direct Hasse evaluation, and (1, k-1)-weighted degree < s*(n-tau).
VerifyResult verify_interpolation(const GrsCode& code, const std::vector<uint32_t>& r,
                                  const DecodeParams& params, const BiPoly& q);

/// All codewords within distance tau of r, by scanning all q^k messages.
/// Requires q^k <= 2^20.
std::vector<std::vector<uint32_t>> exhaustive_decode(const GrsCode& code,
                                                     const std::vector<uint32_t>& r,
                                                     size_t tau);

}  // namespace oracle
}  // namespace grs

#endif
