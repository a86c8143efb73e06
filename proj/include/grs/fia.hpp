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

#ifndef GRS_FIA_HPP
#define GRS_FIA_HPP

#include "grs/bipoly.hpp"
#include "grs/syndromes.hpp"

namespace grs {

/**
 * Column order for a horizontal band of blocks: pairs (nu, mu) with
 * nu <= ell and mu < N[nu], sorted by mu + nu * wy ascending, ties
 * broken by smaller nu. For the interpolation systems wy = k - 1, so
 * this is (1, k-1)-weighted monomial order on x^mu y^nu.
 */
class OrderH {
   public:
    OrderH(size_t wy, std::vector<size_t> N);

    size_t size() const { return pairs_.size(); }
    std::pair<size_t, size_t> pair(size_t c) const;
    size_t index(size_t nu, size_t mu) const;
    std::pair<size_t, size_t> next(size_t nu, size_t mu) const {
        return pair(index(nu, mu) + 1);
    }

   private:
    std::vector<std::pair<size_t, size_t>> pairs_;
    std::vector<std::vector<size_t>> idx_;  // [nu][mu] -> column index
};

/**
 * Row order for a vertical stack of s bands where band theta has
 * (s - theta) * n rows: pairs (theta, kappa) sorted by kappa + theta * n
 * ascending, ties broken by smaller theta.
 */
class OrderV {
   public:
    OrderV(size_t s, size_t n);

    size_t size() const { return pairs_.size(); }
    std::pair<size_t, size_t> pair(size_t r) const;
    size_t index(size_t theta, size_t kappa) const;
    std::pair<size_t, size_t> next(size_t theta, size_t kappa) const {
        return pair(index(theta, kappa) + 1);
    }
    std::pair<size_t, size_t> prev(size_t theta, size_t kappa) const;

   private:
    std::vector<std::pair<size_t, size_t>> pairs_;
    std::vector<std::vector<size_t>> idx_;  // [theta][kappa] -> row index
};

/// One loop iteration of any FIA variant: where the pointers stood and
/// whether the discrepancy was true (forced a column change).
struct FiaTraceRow {
    size_t step = 0;
    size_t c_col = 0;     // column index in visiting order
    size_t nu = 0, mu = 0;
    size_t r_row = 0;     // row index in visiting order
    size_t theta = 0, kappa = 0;
    bool true_discrepancy = false;
};

/// CSV with header step,C_col,nu,mu,R_row,theta,kappa,true_discrepancy.
std::string trace_to_csv(const std::vector<FiaTraceRow>& trace);

struct FiaUniResult {
    size_t mu = 0;  // first dependent column
    UniPoly T;      // T_mu != 0; combines columns 0..mu to zero
    std::vector<FiaTraceRow> trace;
};

struct FiaBiResult {
    BiPoly T;
    std::vector<FiaTraceRow> trace;
};

/// Plain Feng-Tzeng FIA on a dense matrix (rows of equal length).
/// Finds the smallest mu such that columns 0..mu are linearly dependent.
FiaUniResult fia_generic(const Field& f, const std::vector<std::vector<uint32_t>>& m);

/// FIA on the Hankel matrix M_{i,j} = seq[i+j] with `rows` rows and
/// `cols` columns; re-enters each new column one row earlier with
/// T <- x*T instead of restarting from the top.
FiaUniResult fia_hankel(const Field& f, const std::vector<uint32_t>& seq,
                        size_t rows, size_t cols);

/// FIA on a horizontal band of Hankel blocks (multiplicity-one syndrome
/// set); columns are visited in OrderH. `paranoid` re-checks the loop
/// invariant at every column change (test use only, quadratic cost).
FiaBiResult fia_sudan(const SyndromeSet& set, bool paranoid = false);

/// FIA on the Block-Hankel system of a general syndrome set; rows are
/// visited in OrderV, columns in OrderH. Reduces to fia_sudan at s = 1.
FiaBiResult fia_gs(const SyndromeSet& set, bool paranoid = false);

}  // namespace grs

#endif
