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

#include "grs/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

UniPoly::UniPoly(Field f, std::vector<uint32_t> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
    for (uint32_t c : c_)
        if (c >= f_.q()) throw std::invalid_argument("coefficient out of range");
    normalize();
}

UniPoly UniPoly::monomial(const Field& f, uint32_t coeff, size_t deg) {
    UniPoly r(f);
    if (coeff != 0) {
        r.c_.assign(deg + 1, 0);
        r.c_[deg] = coeff;
    }
    if (coeff >= f.q()) throw std::invalid_argument("coefficient out of range");
    return r;
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Field& UniPoly::same(const UniPoly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("polynomials over distinct fields");
    return f_;
}

uint32_t UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

uint32_t UniPoly::eval(uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    same(o);
    UniPoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_.add(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r(f_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.neg(c_[i]);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    same(o);
    UniPoly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::scaled(uint32_t c) const {
    UniPoly r(f_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.mul(c_[i], c);
    return r;
}

UniPoly UniPoly::shifted_up(size_t k) const {
    UniPoly r(f_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + (long)k);
    return r;
}

UniPoly UniPoly::truncated(size_t n) const {
    UniPoly r(f_);
    r.c_.assign(c_.begin(), c_.begin() + (long)std::min(n, c_.size()));
    r.normalize();
    return r;
}

UniPoly UniPoly::pow(uint32_t e) const {
    UniPoly r = constant(f_, 1);
    for (uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

size_t UniPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    same(d);
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q(f_), r = *this;
    if (r.c_.size() < d.c_.size()) return {q, r};
    q.c_.assign(r.c_.size() - d.c_.size() + 1, 0);
    const uint32_t li = f_.inv(d.leading());
    for (size_t off = q.c_.size(); off-- > 0;) {
        uint32_t c = f_.mul(r.c_[off + d.c_.size() - 1], li);
        if (c == 0) continue;
        q.c_[off] = c;
        for (size_t j = 0; j < d.c_.size(); ++j)
            r.c_[off + j] = f_.sub(r.c_[off + j], f_.mul(c, d.c_[j]));
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

UniPoly UniPoly::reciprocal(size_t n_slots) const {
    if (degree() >= (int)n_slots)
        throw std::invalid_argument("reciprocal window smaller than degree");
    UniPoly r(f_);
    r.c_.assign(n_slots, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[n_slots - 1 - i] = c_[i];
    r.normalize();
    return r;
}

UniPoly UniPoly::lagrange(const Field& f,
                          const std::vector<std::pair<uint32_t, uint32_t>>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate interpolation node");

    UniPoly acc(f);
    for (size_t i = 0; i < n; ++i) {
        UniPoly basis = constant(f, 1);
        uint32_t denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(f, {f.neg(points[j].first), 1});
            denom = f.mul(denom, f.sub(points[i].first, points[j].first));
        }
        acc = acc + basis.scaled(f.div(points[i].second, denom));
    }
    return acc;
}

UniPoly UniPoly::series_div(const UniPoly& num, const UniPoly& den, size_t n_terms) {
    const Field& f = num.same(den);
    if (den.coeff(0) == 0)
        throw std::domain_error("power series division by a multiple of x");
    const uint32_t d0i = f.inv(den.coeff(0));
    UniPoly r(f);
    r.c_.assign(n_terms, 0);
    for (size_t j = 0; j < n_terms; ++j) {
        uint32_t acc = num.coeff(j);
        const size_t lo = j >= den.c_.size() ? j - den.c_.size() + 1 : 0;
        for (size_t i = lo; i < j; ++i)
            acc = f.sub(acc, f.mul(den.coeff(j - i), r.c_[i]));
        r.c_[j] = f.mul(acc, d0i);
    }
    r.normalize();
    return r;
}

std::vector<uint32_t> UniPoly::roots() const {
    std::vector<uint32_t> out;
    if (is_zero()) throw std::domain_error("every element is a root of zero");
    for (uint32_t x = 0; x < f_.q(); ++x)
        if (eval(x) == 0) out.push_back(x);
    return out;
}

std::string UniPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i];
    os << "]";
    return os.str();
}

}  // namespace grs
