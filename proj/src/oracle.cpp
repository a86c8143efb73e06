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

#include "grs/oracle.hpp"

#include <sstream>

namespace grs {
namespace oracle {

BiPoly ConstraintMatrix::to_bipoly(const std::vector<uint32_t>& flat) const {
    if (flat.size() != order.size())
        throw std::invalid_argument("vector length does not match column count");
    std::vector<UniPoly> poly_rows;
    for (size_t c = 0; c < flat.size(); ++c) {
        auto [nu, mu] = order.pair(c);
        if (nu >= poly_rows.size()) poly_rows.resize(nu + 1, UniPoly(field));
        poly_rows[nu] = poly_rows[nu] + UniPoly::monomial(field, flat[c], mu);
    }
    return BiPoly(field, std::move(poly_rows));
}

std::vector<uint32_t> ConstraintMatrix::flatten(const BiPoly& q) const {
    std::vector<uint32_t> flat(order.size(), 0);
    for (size_t nu = 0; nu < q.rows().size(); ++nu) {
        const auto& cs = q.rows()[nu].coeffs();
        for (size_t mu = 0; mu < cs.size(); ++mu) {
            if (cs[mu] == 0) continue;
            flat[order.index(nu, mu)] = cs[mu];  // throws if out of budget
        }
    }
    return flat;
}

ConstraintMatrix build_constraints(const GrsCode& code, const std::vector<uint32_t>& r,
                                   const DecodeParams& params) {
    const Field& f = code.field();
    if (r.size() != code.n())
        throw std::invalid_argument("word length does not match code length");
    ConstraintMatrix m{f, OrderH(code.k() - 1, params.N), {}};

    for (size_t i = 0; i < code.n(); ++i) {
        const uint32_t alpha = code.alphas()[i];
        const uint32_t beta = f.div(r[i], code.vprimes()[i]);
        for (size_t a = 0; a < params.s; ++a) {
            for (size_t b = 0; a + b < params.s; ++b) {
                std::vector<uint32_t> row(m.order.size(), 0);
                for (size_t c = 0; c < m.order.size(); ++c) {
                    auto [nu, mu] = m.order.pair(c);
                    if (mu < a || nu < b) continue;
                    uint32_t v = f.mul(f.binom(mu, a), f.binom(nu, b));
                    v = f.mul(v, f.pow(alpha, (int64_t)(mu - a)));
                    v = f.mul(v, f.pow(beta, (int64_t)(nu - b)));
                    row[c] = v;
                }
                m.rows.push_back(std::move(row));
            }
        }
    }
    return m;
}

std::vector<std::vector<uint32_t>> nullspace(const Field& f,
                                             const std::vector<std::vector<uint32_t>>& m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    std::vector<std::vector<uint32_t>> a = m;
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < a.size(); ++c) {
        size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        const uint32_t inv = f.inv(a[rank][c]);
        for (size_t j = c; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const uint32_t factor = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
        }
        pivot_of_col[c] = (long)rank;
        ++rank;
    }

    std::vector<std::vector<uint32_t>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<uint32_t> v(cols, 0);
        v[c] = 1;
        for (size_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0)
                v[j] = f.neg(a[(size_t)pivot_of_col[j]][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

VerifyResult verify_interpolation(const GrsCode& code, const std::vector<uint32_t>& r,
                                  const DecodeParams& params, const BiPoly& q) {
    const Field& f = code.field();
    if (q.is_zero()) return {false, "Q is the zero polynomial"};

    for (size_t i = 0; i < code.n(); ++i) {
        const uint32_t alpha = code.alphas()[i];
        const uint32_t beta = f.div(r[i], code.vprimes()[i]);
        for (size_t a = 0; a < params.s; ++a) {
            for (size_t b = 0; a + b < params.s; ++b) {
                if (q.hasse_eval(a, b, alpha, beta) != 0) {
                    std::ostringstream os;
                    os << "Hasse derivative (" << a << "," << b
                       << ") nonzero at point " << i;
                    return {false, os.str()};
                }
            }
        }
    }

    const int limit = (int)(params.s * (code.n() - params.tau));
    if (q.wdeg(1, (int)code.k() - 1) >= limit) {
        std::ostringstream os;
        os << "weighted degree " << q.wdeg(1, (int)code.k() - 1) << " >= " << limit;
        return {false, os.str()};
    }
    return {true, ""};
}

std::vector<std::vector<uint32_t>> exhaustive_decode(const GrsCode& code,
                                                     const std::vector<uint32_t>& r,
                                                     size_t tau) {
    const Field& f = code.field();
    const size_t k = code.k();
    double count = 1;
    for (size_t i = 0; i < k; ++i) count *= f.q();
    if (count > (double)(1 << 20)) throw std::invalid_argument("message space too large");

    std::vector<std::vector<uint32_t>> hits;
    std::vector<uint32_t> msg(k, 0);
    while (true) {
        std::vector<uint32_t> word = code.encode(msg);
        if (hamming_distance(word, r) <= tau) hits.push_back(std::move(word));
        size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
    }
    return hits;
}

}  // namespace oracle
}  // namespace grs
