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

#include "grs/decoder.hpp"

#include <algorithm>
#include <cmath>

namespace grs {

DecodeParams params_for(const GrsCode& code, size_t tau) {
    const size_t n = code.n(), k = code.k();
    if (tau >= n || (double)tau >= (double)n - std::sqrt((double)(n * (k - 1))))
        throw infeasible_error("radius beyond the list-decoding limit");

    for (size_t s = 1; s <= kMaxMultiplicity; ++s) {
        const long per = (long)(s * (n - tau));
        const size_t constraints = s * (s + 1) / 2 * n;
        std::vector<size_t> N;
        size_t total = 0;
        for (size_t ell = 0;; ++ell) {
            const long nt = per - (long)(ell * (k - 1));
            if (nt < 1) break;
            N.push_back((size_t)nt);
            total += (size_t)nt;
            if (ell >= s && total > constraints)
                return {s, ell, tau, std::move(N)};
        }
    }
    throw infeasible_error("no feasible multiplicity up to the configured cap");
}

BmdResult decode_bmd(const GrsCode& code, const std::vector<uint32_t>& r) {
    const Field& f = code.field();
    const size_t n = code.n(), k = code.k();
    BmdResult res;

    std::vector<uint32_t> syn = classical_syndromes(code, r);
    if (std::all_of(syn.begin(), syn.end(), [](uint32_t v) { return v == 0; })) {
        res.ok = true;
        res.codeword = r;
        return res;
    }

    const size_t half = (n - k) / 2;
    if (half == 0) return res;

    FiaUniResult fia;
    try {
        fia = fia_hankel(f, syn, half, half + 1);
    } catch (const std::domain_error&) {
        return res;  // no locator within the degree bound
    }
    res.trace = std::move(fia.trace);

    // T is the reversed locator; its roots are the error locators themselves.
    const UniPoly lambda = fia.T.reciprocal((size_t)fia.T.degree() + 1);
    if (lambda.coeff(0) == 0) return res;

    std::vector<size_t> positions;
    for (size_t j = 0; j < n; ++j)
        if (fia.T.eval(code.alphas()[j]) == 0) positions.push_back(j);
    if ((int)positions.size() != lambda.degree()) return res;

    UniPoly spoly(f, syn);
    UniPoly omega = (spoly * lambda).truncated(n - k);
    if (omega.degree() >= lambda.degree()) return res;

    std::vector<uint32_t> word = r;
    const auto& duals = code.dual_multipliers();
    const uint32_t c0 = lambda.coeff(0);
    for (size_t j : positions) {
        const uint32_t aj_inv = f.inv(code.alphas()[j]);
        uint32_t denom = f.mul(c0, duals[j]);
        for (size_t i : positions)
            if (i != j)
                denom = f.mul(denom, f.sub(1, f.mul(code.alphas()[i], aj_inv)));
        const uint32_t ej = f.div(omega.eval(aj_inv), denom);
        word[j] = f.sub(word[j], ej);
    }

    std::vector<uint32_t> recheck = classical_syndromes(code, word);
    if (!std::all_of(recheck.begin(), recheck.end(), [](uint32_t v) { return v == 0; }))
        return res;
    if (hamming_distance(word, r) > half) return res;
    res.ok = true;
    res.codeword = std::move(word);
    return res;
}

InterpolateResult interpolate(const GrsCode& code, const std::vector<uint32_t>& r,
                              const DecodeParams& params) {
    SyndromeSet set = gs_syndromes(code, r, params.s, params.ell, params.tau);
    FiaBiResult fia = fia_gs(set);
    return {std::move(fia.T), std::move(fia.trace)};
}

namespace {

void rr_descend(const Field& f, const BiPoly& q, size_t k, size_t depth,
                std::vector<uint32_t>& prefix, std::vector<std::vector<uint32_t>>& out) {
    if (q.is_zero()) return;
    if (depth == k) {
        out.push_back(prefix);
        return;
    }
    const BiPoly qs = q.x_stripped(q.x_valuation());

    // y-roots of Q(0, y) are the possible next coefficients
    std::vector<uint32_t> slice(qs.rows().size());
    for (size_t j = 0; j < slice.size(); ++j) slice[j] = qs.rows()[j].coeff(0);
    UniPoly u(f, slice);
    if (u.is_zero()) return;  // cannot happen after stripping, kept defensive

    for (uint32_t gamma : u.roots()) {
        prefix.push_back(gamma);
        rr_descend(f, qs.substituted_y_affine(gamma), k, depth + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<UniPoly> find_y_roots(const BiPoly& q, size_t k) {
    if (q.is_zero()) throw std::invalid_argument("zero polynomial");
    const Field& f = q.field();

    std::vector<std::vector<uint32_t>> raw;
    std::vector<uint32_t> prefix;
    rr_descend(f, q, k, 0, prefix, raw);

    std::vector<UniPoly> roots;
    for (const auto& cs : raw) {
        UniPoly cand(f, cs);
        if (!q.y_substituted(cand).is_zero()) continue;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
    }
    return roots;
}

ListDecodeResult list_decode(const GrsCode& code, const std::vector<uint32_t>& r,
                             size_t tau) {
    ListDecodeResult res;
    res.params = params_for(code, tau);
    InterpolateResult ip = interpolate(code, r, res.params);
    res.Q = std::move(ip.Q);
    res.trace = std::move(ip.trace);

    for (const UniPoly& msg : find_y_roots(res.Q, code.k())) {
        std::vector<uint32_t> word = code.encode(msg);
        const size_t dist = hamming_distance(word, r);
        if (dist <= tau) res.candidates.push_back({msg, std::move(word), dist});
    }
    std::sort(res.candidates.begin(), res.candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  return a.distance != b.distance ? a.distance < b.distance
                                                 : a.message.coeffs() < b.message.coeffs();
              });
    return res;
}

}  // namespace grs
