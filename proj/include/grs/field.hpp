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

#ifndef GRS_FIELD_HPP
#define GRS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace grs {

/**
 * Arithmetic in GF(p^m) with q = p^m <= 2^16.
 *
 * Elements are canonical integer indices in [0, q): for prime fields the
 * residue itself, for extension fields the coefficient vector of the residue
 * polynomial read as a base-p integer. Multiplicative arithmetic goes through
 * log/antilog tables built from a generator found at construction time.
 *
 * A Field is a cheap value-semantic handle to immutable shared tables; two
 * handles compare equal iff they refer to the same construction.
 */
class Field {
   public:
    Field() = default;

    /// Prime field GF(p).
    explicit Field(uint32_t p) : Field(p, 1, {}) {}

    /// GF(p^m); `modulus` is the monic irreducible modulus polynomial of
    /// degree m over GF(p), coefficients low-to-high (ignored when m = 1).
    Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    bool valid() const noexcept { return d_ != nullptr; }
    uint32_t p() const { return d_->p; }
    uint32_t m() const { return d_->m; }
    uint32_t q() const { return d_->q; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;

    /// Integer reduced into the prime subfield (element index of n mod p).
    uint32_t from_int(int64_t n) const;

    /// Binomial coefficient C(a, b) mod p via Lucas' theorem, as an element.
    uint32_t binom(uint64_t a, uint64_t b) const;

    /// Generator of the multiplicative group used for the tables.
    uint32_t generator() const { return d_->gen; }

    /// generator()^i; i in [0, q-1).
    uint32_t gen_pow(uint32_t i) const { return d_->exp[i % (d_->q - 1)]; }

    bool operator==(const Field& o) const noexcept { return d_ == o.d_; }
    bool operator!=(const Field& o) const noexcept { return d_ != o.d_; }

    std::string describe() const;

   private:
    struct Data {
        uint32_t p = 0, m = 0, q = 0, gen = 0;
        std::vector<uint32_t> modulus;   // length m+1 when m > 1
        std::vector<uint32_t> exp;       // 2(q-1) entries, doubled for index math
        std::vector<uint32_t> log;       // q entries, log[0] unused
        std::vector<uint32_t> fact;      // factorials mod p, p entries
    };
    std::shared_ptr<const Data> d_;

    void check(uint32_t a) const {
        if (a >= d_->q) throw std::invalid_argument("element index out of range");
    }
};

/// A field element bound to its field; mixed-field arithmetic throws.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(Field f, uint32_t v) : f_(std::move(f)), v_(v) {}

    uint32_t value() const { return v_; }
    const Field& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {f_, same(o).add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {f_, same(o).sub(v_, o.v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {f_, same(o).mul(v_, o.v_)}; }
    FieldElement operator/(const FieldElement& o) const { return {f_, same(o).div(v_, o.v_)}; }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement inverse() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(int64_t e) const { return {f_, f_.pow(v_, e)}; }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }

   private:
    const Field& same(const FieldElement& o) const {
        if (f_ != o.f_) throw std::invalid_argument("elements of distinct fields");
        return f_;
    }
    Field f_;
    uint32_t v_ = 0;
};

}  // namespace grs

#endif
