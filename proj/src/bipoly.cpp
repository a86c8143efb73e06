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

#include "grs/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

BiPoly::BiPoly(Field f, std::vector<UniPoly> rows)
    : f_(std::move(f)), rows_(std::move(rows)) {
    for (const UniPoly& r : rows_)
        if (r.field() != f_) throw std::invalid_argument("row over a distinct field");
    normalize();
}

BiPoly BiPoly::monomial(const Field& f, uint32_t c, size_t i, size_t j) {
    BiPoly r(f);
    if (c != 0) {
        r.rows_.assign(j + 1, UniPoly(f));
        r.rows_[j] = UniPoly::monomial(f, c, i);
    } else {
        // range-check even when dropping the term
        UniPoly::monomial(f, c, i);
    }
    return r;
}

void BiPoly::normalize() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

const Field& BiPoly::same(const BiPoly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("polynomials over distinct fields");
    return f_;
}

int BiPoly::x_degree() const {
    int d = kNegInfDegree;
    for (const UniPoly& r : rows_) d = std::max(d, r.degree());
    return d;
}

uint32_t BiPoly::eval(uint32_t x, uint32_t y) const {
    uint32_t acc = 0;
    for (size_t j = rows_.size(); j-- > 0;)
        acc = f_.add(f_.mul(acc, y), rows_[j].eval(x));
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    same(o);
    BiPoly r(f_);
    r.rows_.resize(std::max(rows_.size(), o.rows_.size()), UniPoly(f_));
    for (size_t j = 0; j < r.rows_.size(); ++j) {
        UniPoly a = j < rows_.size() ? rows_[j] : UniPoly(f_);
        UniPoly b = j < o.rows_.size() ? o.rows_[j] : UniPoly(f_);
        r.rows_[j] = a + b;
    }
    r.normalize();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + o.scaled(f_.neg(1)); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    same(o);
    BiPoly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.rows_.assign(rows_.size() + o.rows_.size() - 1, UniPoly(f_));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < o.rows_.size(); ++j)
            r.rows_[i + j] = r.rows_[i + j] + rows_[i] * o.rows_[j];
    r.normalize();
    return r;
}

BiPoly BiPoly::scaled(uint32_t c) const {
    BiPoly r(f_);
    if (c == 0) return r;
    r.rows_.reserve(rows_.size());
    for (const UniPoly& row : rows_) r.rows_.push_back(row.scaled(c));
    return r;
}

BiPoly BiPoly::shifted_up_x(size_t k) const {
    BiPoly r(f_);
    r.rows_.reserve(rows_.size());
    for (const UniPoly& row : rows_) r.rows_.push_back(row.shifted_up(k));
    return r;
}

BiPoly BiPoly::hasse_derivative(size_t a, size_t b) const {
    BiPoly out(f_);
    for (size_t j = b; j < rows_.size(); ++j) {
        const uint32_t cj = f_.binom(j, b);
        const auto& cs = rows_[j].coeffs();
        std::vector<uint32_t> row;
        if (cs.size() > a) {
            row.resize(cs.size() - a);
            for (size_t i = a; i < cs.size(); ++i)
                row[i - a] = f_.mul(f_.mul(f_.binom(i, a), cj), cs[i]);
        }
        out.rows_.resize(j - b + 1, UniPoly(f_));
        out.rows_[j - b] = UniPoly(f_, std::move(row));
    }
    out.normalize();
    return out;
}

uint32_t BiPoly::hasse_eval(size_t a, size_t b, uint32_t x0, uint32_t y0) const {
    uint32_t acc = 0;
    for (size_t j = b; j < rows_.size(); ++j) {
        const uint32_t cj = f_.binom(j, b);
        if (cj == 0) continue;
        uint32_t inner = 0;
        const auto& cs = rows_[j].coeffs();
        for (size_t i = a; i < cs.size(); ++i) {
            if (cs[i] == 0) continue;
            uint32_t term = f_.mul(f_.binom(i, a), cs[i]);
            term = f_.mul(term, f_.pow(x0, (int64_t)(i - a)));
            inner = f_.add(inner, term);
        }
        acc = f_.add(acc, f_.mul(f_.mul(cj, inner), f_.pow(y0, (int64_t)(j - b))));
    }
    return acc;
}

size_t BiPoly::multiplicity_at(uint32_t x0, uint32_t y0) const {
    if (is_zero()) throw std::domain_error("zero polynomial has unbounded multiplicity");
    const size_t cap = (size_t)std::max(x_degree(), 0) + rows_.size();
    for (size_t s = 0; s <= cap; ++s)
        for (size_t a = 0; a <= s; ++a)
            if (hasse_eval(a, s - a, x0, y0) != 0) return s;
    throw std::logic_error("multiplicity scan exhausted");
}

int BiPoly::wdeg(int wx, int wy) const {
    int best = kNegInfDegree;
    for (size_t j = 0; j < rows_.size(); ++j) {
        const auto& cs = rows_[j].coeffs();
        for (size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) best = std::max(best, (int)i * wx + (int)j * wy);
    }
    return best;
}

UniPoly BiPoly::y_substituted(const UniPoly& r) const {
    if (r.field() != f_) throw std::invalid_argument("argument over a distinct field");
    UniPoly acc(f_);
    for (size_t j = rows_.size(); j-- > 0;) acc = acc * r + rows_[j];
    return acc;
}

BiPoly BiPoly::substituted_y_affine(uint32_t gamma) const {
    BiPoly out(f_);
    out.rows_.assign(rows_.size(), UniPoly(f_));
    for (size_t j = 0; j < rows_.size(); ++j) {
        UniPoly acc(f_);
        for (size_t t = j; t < rows_.size(); ++t) {
            const uint32_t c = f_.mul(f_.binom(t, j), f_.pow(gamma, (int64_t)(t - j)));
            acc = acc + rows_[t].scaled(c);
        }
        out.rows_[j] = acc.shifted_up(j);
    }
    out.normalize();
    return out;
}

size_t BiPoly::x_valuation() const {
    size_t v = SIZE_MAX;
    for (const UniPoly& r : rows_)
        if (!r.is_zero()) v = std::min(v, r.valuation());
    return v == SIZE_MAX ? 0 : v;
}

BiPoly BiPoly::x_stripped(size_t v) const {
    if (v == 0) return *this;
    if (v > x_valuation()) throw std::invalid_argument("stripping below x^0");
    BiPoly out(f_);
    out.rows_.reserve(rows_.size());
    for (const UniPoly& r : rows_) {
        std::vector<uint32_t> cs(r.coeffs());
        cs.erase(cs.begin(), cs.begin() + (long)std::min(v, cs.size()));
        out.rows_.emplace_back(f_, std::move(cs));
    }
    out.normalize();
    return out;
}

std::string BiPoly::to_string() const {
    std::ostringstream os;
    for (size_t j = 0; j < rows_.size(); ++j)
        os << (j ? " + y^" : "y^") << j << "*" << rows_[j].to_string();
    if (rows_.empty()) os << "0";
    return os.str();
}

uint32_t inner_product(const BiPoly& a, const BiPoly& b) {
    const Field& f = a.field();
    if (f != b.field()) throw std::invalid_argument("polynomials over distinct fields");
    uint32_t acc = 0;
    const size_t rows = std::min(a.rows().size(), b.rows().size());
    for (size_t j = 0; j < rows; ++j) {
        const auto& ca = a.rows()[j].coeffs();
        const auto& cb = b.rows()[j].coeffs();
        for (size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
            acc = f.add(acc, f.mul(ca[i], cb[i]));
    }
    return acc;
}

}  // namespace grs
