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

#ifndef GRS_BIPOLY_HPP
#define GRS_BIPOLY_HPP

#include "grs/unipoly.hpp"

namespace grs {

/**
 * Bivariate polynomial Q(x, y) over a Field, stored as a vector of
 * univariate rows: rows()[j] is the x-polynomial multiplying y^j.
 * Normalized so that the last row is nonzero.
 */
class BiPoly {
   public:
    BiPoly() = default;
    explicit BiPoly(Field f) : f_(std::move(f)) {}
    BiPoly(Field f, std::vector<UniPoly> rows);

    /// c * x^i * y^j.
    static BiPoly monomial(const Field& f, uint32_t c, size_t i, size_t j);

    const Field& field() const { return f_; }
    const std::vector<UniPoly>& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    int y_degree() const { return rows_.empty() ? kNegInfDegree : (int)rows_.size() - 1; }
    int x_degree() const;

    /// Coefficient of x^i y^j.
    uint32_t coeff(size_t i, size_t j) const {
        return j < rows_.size() ? rows_[j].coeff(i) : 0;
    }

    uint32_t eval(uint32_t x, uint32_t y) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return f_ == o.f_ && rows_ == o.rows_; }

    BiPoly scaled(uint32_t c) const;
    BiPoly shifted_up_x(size_t k) const;  // multiply by x^k

    /// Hasse derivative of order (a, b): coefficient (i, j) of the result
    /// is C(i+a, a) * C(j+b, b) * q_{i+a, j+b}.
    BiPoly hasse_derivative(size_t a, size_t b) const;

    /// Hasse derivative of order (a, b) evaluated at (x0, y0):
    /// sum over i, j of C(i, a) C(j, b) q_{ij} x0^{i-a} y0^{j-b}.
    uint32_t hasse_eval(size_t a, size_t b, uint32_t x0, uint32_t y0) const;

    /// Multiplicity of the zero of Q at (x0, y0): the smallest s such that
    /// some order-(a, b) Hasse derivative with a + b = s is nonzero there.
    /// Throws for the zero polynomial.
    size_t multiplicity_at(uint32_t x0, uint32_t y0) const;

    /// Weighted degree max{ i*wx + j*wy : q_{ij} != 0 }, kNegInfDegree if zero.
    int wdeg(int wx, int wy) const;

    /// Q(x, r(x)) as a univariate polynomial.
    UniPoly y_substituted(const UniPoly& r) const;

    /// Q(x, x*y + gamma); the row transform used when descending one level
    /// in the y-root search.
    BiPoly substituted_y_affine(uint32_t gamma) const;

    /// Largest v with x^v dividing every row (0 for the zero polynomial).
    size_t x_valuation() const;

    /// Divide every row by x^v; v must not exceed x_valuation().
    BiPoly x_stripped(size_t v) const;

    std::string to_string() const;

   private:
    void normalize();
    const Field& same(const BiPoly& o) const;

    Field f_;
    std::vector<UniPoly> rows_;
};

/// Coefficient-wise dot product over the union of supports.
uint32_t inner_product(const BiPoly& a, const BiPoly& b);

}  // namespace grs

#endif
