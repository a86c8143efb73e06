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

#include "grs/fia.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

OrderH::OrderH(size_t wy, std::vector<size_t> N) {
    idx_.resize(N.size());
    for (size_t nu = 0; nu < N.size(); ++nu) {
        idx_[nu].assign(N[nu], 0);
        for (size_t mu = 0; mu < N[nu]; ++mu) pairs_.push_back({nu, mu});
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [wy](const std::pair<size_t, size_t>& a, const std::pair<size_t, size_t>& b) {
                  const size_t ka = a.second + a.first * wy;
                  const size_t kb = b.second + b.first * wy;
                  return ka != kb ? ka < kb : a.first < b.first;
              });
    for (size_t c = 0; c < pairs_.size(); ++c)
        idx_[pairs_[c].first][pairs_[c].second] = c;
}

std::pair<size_t, size_t> OrderH::pair(size_t c) const {
    if (c >= pairs_.size()) throw std::out_of_range("column index out of range");
    return pairs_[c];
}

size_t OrderH::index(size_t nu, size_t mu) const {
    if (nu >= idx_.size() || mu >= idx_[nu].size())
        throw std::out_of_range("column pair out of range");
    return idx_[nu][mu];
}

OrderV::OrderV(size_t s, size_t n) {
    idx_.resize(s);
    for (size_t th = 0; th < s; ++th) {
        idx_[th].assign((s - th) * n, 0);
        for (size_t ka = 0; ka < (s - th) * n; ++ka) pairs_.push_back({th, ka});
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [n](const std::pair<size_t, size_t>& a, const std::pair<size_t, size_t>& b) {
                  const size_t ka = a.second + a.first * n;
                  const size_t kb = b.second + b.first * n;
                  return ka != kb ? ka < kb : a.first < b.first;
              });
    for (size_t r = 0; r < pairs_.size(); ++r)
        idx_[pairs_[r].first][pairs_[r].second] = r;
}

std::pair<size_t, size_t> OrderV::pair(size_t r) const {
    if (r >= pairs_.size()) throw std::out_of_range("row index out of range");
    return pairs_[r];
}

size_t OrderV::index(size_t theta, size_t kappa) const {
    if (theta >= idx_.size() || kappa >= idx_[theta].size())
        throw std::out_of_range("row pair out of range");
    return idx_[theta][kappa];
}

std::pair<size_t, size_t> OrderV::prev(size_t theta, size_t kappa) const {
    const size_t r = index(theta, kappa);
    if (r == 0) throw std::out_of_range("first row has no predecessor");
    return pairs_[r - 1];
}

std::string trace_to_csv(const std::vector<FiaTraceRow>& trace) {
    std::ostringstream os;
    os << "step,C_col,nu,mu,R_row,theta,kappa,true_discrepancy\n";
    for (const FiaTraceRow& t : trace)
        os << t.step << "," << t.c_col << "," << t.nu << "," << t.mu << ","
           << t.r_row << "," << t.theta << "," << t.kappa << ","
           << (t.true_discrepancy ? 1 : 0) << "\n";
    return os.str();
}

namespace {

// <x^kappa T, S^(band)>: correlate each row of T against the stored
// coefficient sequence of block (band, t) shifted by kappa.
uint32_t band_inner(const Field& f, const BiPoly& T, const SyndromeSet& set,
                    size_t band, size_t kappa) {
    uint32_t acc = 0;
    for (size_t t = 0; t < T.rows().size(); ++t) {
        const auto& blk = set.blocks[band][t];
        const auto& cs = T.rows()[t].coeffs();
        for (size_t i = 0; i < cs.size(); ++i) {
            if (cs[i] == 0) continue;
            if (kappa + i >= blk.size())
                throw std::logic_error("stored syndrome sequence too short");
            acc = f.add(acc, f.mul(cs[i], blk[kappa + i]));
        }
    }
    return acc;
}

[[noreturn]] void exhausted() {
    throw std::domain_error("FIA ran out of columns; system has no solution "
                            "within the degree bounds");
}

}  // namespace

FiaUniResult fia_generic(const Field& f, const std::vector<std::vector<uint32_t>>& m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    FiaUniResult res;
    std::vector<uint32_t> D(rows, 0);
    std::vector<UniPoly> A(rows, UniPoly(f));
    size_t mu = 0, kappa = 0, step = 0;
    if (mu >= cols) exhausted();
    UniPoly T = UniPoly::monomial(f, 1, mu);

    while (kappa < rows) {
        uint32_t delta = 0;
        for (size_t j = 0; j < T.coeffs().size(); ++j)
            delta = f.add(delta, f.mul(T.coeff(j), m[kappa][j]));

        const bool true_disc = delta != 0 && D[kappa] == 0;
        res.trace.push_back({step++, mu, 0, mu, kappa, 0, kappa, true_disc});
        if (!true_disc) {
            if (delta != 0)
                T = T - A[kappa].scaled(f.div(delta, D[kappa]));
            ++kappa;
        } else {
            A[kappa] = T;
            D[kappa] = delta;
            ++mu;
            if (mu >= cols) exhausted();
            T = UniPoly::monomial(f, 1, mu);
            kappa = 0;
        }
    }
    res.mu = mu;
    res.T = T;
    return res;
}

FiaUniResult fia_hankel(const Field& f, const std::vector<uint32_t>& seq,
                        size_t rows, size_t cols) {
    if (rows > 0 && cols > 0 && seq.size() < rows + cols - 1)
        throw std::invalid_argument("sequence shorter than the matrix diagonal");

    FiaUniResult res;
    std::vector<uint32_t> D(rows, 0);
    std::vector<UniPoly> A(rows, UniPoly(f));
    size_t R = 0;  // stored row pointer of the single band
    size_t mu = 0, kappa = 0, step = 0;
    if (cols == 0) exhausted();
    UniPoly T = UniPoly::monomial(f, 1, 0);
    uint32_t delta = rows == 0 ? 0 : seq[0];
    bool compute = false;  // first iteration's delta is preset above

    while (kappa < rows) {
        if (compute) {
            delta = 0;
            for (size_t j = 0; j < T.coeffs().size(); ++j)
                delta = f.add(delta, f.mul(T.coeff(j), seq[kappa + j]));
        }
        compute = true;

        const bool true_disc = delta != 0 && D[kappa] == 0;
        res.trace.push_back({step++, mu, 0, mu, kappa, 0, kappa, true_disc});
        if (!true_disc) {
            if (delta != 0)
                T = T - A[kappa].scaled(f.div(delta, D[kappa]));
            ++kappa;
        } else {
            A[kappa] = T;
            D[kappa] = delta;
            R = kappa;
            ++mu;
            if (mu >= cols) exhausted();
            if (R < 1) {
                T = UniPoly::monomial(f, 1, mu);
                delta = seq[mu];
                kappa = 0;
            } else {
                T = A[R].shifted_up(1);
                delta = D[R];
                kappa = R - 1;
            }
            compute = false;
        }
    }
    res.mu = mu;
    res.T = T;
    return res;
}

FiaBiResult fia_sudan(const SyndromeSet& set, bool paranoid) {
    if (set.s != 1) throw std::invalid_argument("multiplicity must be 1");
    return fia_gs(set, paranoid);
}

FiaBiResult fia_gs(const SyndromeSet& set, bool paranoid) {
    const Field& f = set.field;
    const size_t s = set.s, n = set.n;
    const OrderH horder(set.k - 1, set.N);
    const OrderV vorder(s, n);
    const size_t total_rows = vorder.size();
    {
        size_t total_cols = 0;
        for (size_t c : set.N) total_cols += c;
        if (total_cols <= total_rows)
            throw std::invalid_argument("under-determined column budget; "
                                        "system may have no solution");
    }

    FiaBiResult res;
    std::vector<uint32_t> D(total_rows, 0);
    std::vector<BiPoly> A(total_rows, BiPoly(f));
    std::vector<size_t> R(set.ell + 1, 0);  // last stored row index per band
    size_t nu = 0, mu = 0;                  // column pointer
    size_t theta = 0, kappa = 0, row = 0;   // row pointer and its index
    size_t step = 0;
    uint32_t delta = 0;
    bool compute = false;
    BiPoly T = BiPoly::monomial(f, 1, 0, 0);
    delta = set.blocks[0][0][0];

    while (row < total_rows) {
        if (compute) delta = band_inner(f, T, set, theta, kappa);
        compute = true;

        const bool true_disc = delta != 0 && D[row] == 0;
        res.trace.push_back(
            {step++, horder.index(nu, mu), nu, mu, row, theta, kappa, true_disc});
        if (!true_disc) {
            if (delta != 0)
                T = T - A[row].scaled(f.div(delta, D[row]));
            ++row;
            if (row < total_rows) {
                auto pr = vorder.pair(row);
                theta = pr.first;
                kappa = pr.second;
            }
        } else {
            A[row] = T;
            D[row] = delta;
            R[nu] = row;
            if (paranoid) {
                for (size_t r = 0; r < row; ++r) {
                    auto pr = vorder.pair(r);
                    if (band_inner(f, T, set, pr.first, pr.second) != 0)
                        throw std::logic_error("loop invariant violated");
                }
            }
            if (horder.index(nu, mu) + 1 >= horder.size()) exhausted();
            auto pc = horder.next(nu, mu);
            nu = pc.first;
            mu = pc.second;
            if (R[nu] < 1) {
                T = BiPoly::monomial(f, 1, mu, nu);
                delta = set.blocks[0][nu][mu];
                theta = 0;
                kappa = 0;
            } else {
                T = A[R[nu]].shifted_up_x(1);
                delta = D[R[nu]];
                auto pr = vorder.pair(R[nu]);
                theta = pr.first;
                kappa = pr.second;
                if (kappa == 0) {
                    // stored pointer sits at the top of its band; re-enter in
                    // the band above at row n-1, where the shifted discrepancy
                    // is known to vanish
                    --theta;
                    kappa = n;
                    delta = 0;
                }
                --kappa;
            }
            row = vorder.index(theta, kappa);
            compute = false;
        }
    }
    res.T = T;
    return res;
}

}  // namespace grs
