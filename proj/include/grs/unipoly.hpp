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

#ifndef GRS_UNIPOLY_HPP
#define GRS_UNIPOLY_HPP

#include <limits>
#include <utility>
#include <vector>

#include "grs/field.hpp"

namespace grs {

/// Degree marker of the zero polynomial. Deliberately not -1: it must never
/// be usable as an exponent by accident.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over a Field, coefficients low-to-high,
/// value-semantic and normalized (no trailing zeros).
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(Field f) : f_(std::move(f)) {}
    UniPoly(Field f, std::vector<uint32_t> coeffs);

    static UniPoly monomial(const Field& f, uint32_t coeff, size_t deg);
    static UniPoly constant(const Field& f, uint32_t c) { return monomial(f, c, 0); }

    const Field& field() const { return f_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : (int)c_.size() - 1; }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const;

    uint32_t eval(uint32_t x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return f_ == o.f_ && c_ == o.c_; }

    UniPoly scaled(uint32_t c) const;
    UniPoly shifted_up(size_t k) const;          // multiply by x^k
    UniPoly truncated(size_t n) const;           // mod x^n
    UniPoly pow(uint32_t e) const;

    /// Largest v with x^v | this (0 for the zero polynomial).
    size_t valuation() const;

    /// Quotient and remainder of this / d (d nonzero).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    /// Coefficient reversal within a window of N slots: result_j = A_{N-1-j}.
    /// Requires deg A < N. Applying it twice with the same N is the identity.
    UniPoly reciprocal(size_t n_slots) const;

    /// Unique polynomial of degree < points.size() through the given
    /// (x, y) pairs; x-coordinates must be pairwise distinct.
    static UniPoly lagrange(const Field& f,
                            const std::vector<std::pair<uint32_t, uint32_t>>& points);

    /// First n_terms coefficients of the formal power series num/den;
    /// requires den(0) != 0.
    static UniPoly series_div(const UniPoly& num, const UniPoly& den, size_t n_terms);

    /// All x in GF(q) with eval(x) == 0, by full scan.
    std::vector<uint32_t> roots() const;

    std::string to_string() const;

   private:
    void normalize();
    const Field& same(const UniPoly& o) const;

    Field f_;
    std::vector<uint32_t> c_;
};

}  // namespace grs

#endif
