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

#include "grs/field.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

namespace {

constexpr uint32_t kMaxQ = 1u << 16;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p) with plain integer coefficient vectors,
// only used during field construction.
using Poly = std::vector<uint32_t>;

void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p); b monic is not required.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    normalize(a);
    uint32_t lead = b.back();
    // lead^{-1} mod p by Fermat
    uint64_t li = 1, base = lead, e = p - 2;
    while (e) {
        if (e & 1) li = li * base % p;
        base = base * base % p;
        e >>= 1;
    }
    while (a.size() >= b.size()) {
        uint64_t c = a.back() * li % p;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (uint32_t)((a[off + i] + (uint64_t)(p - 1) * c % p * b[i]) % p);
        normalize(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Irreducibility by trial division by every monic polynomial of degree
// 1..deg/2. Fine for the supported sizes (p^(m/2) <= 256).
bool is_irreducible(const Poly& f, uint32_t p) {
    uint32_t m = (uint32_t)f.size() - 1;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) {
                g[i] = (uint32_t)(t % p);
                t /= p;
            }
            g[d] = 1;
            Poly r = poly_mod(f, g, p);
            if (poly_is_zero(r)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");

    uint64_t q64 = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q64 *= p;
        if (q64 > kMaxQ) throw std::invalid_argument("field too large (q > 2^16)");
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = (uint32_t)q64;

    if (m > 1) {
        if (modulus.size() != m + 1)
            throw std::invalid_argument("modulus must have degree m");
        for (uint32_t c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(modulus, p))
            throw std::invalid_argument("modulus is reducible");
        d->modulus = modulus;
    }

    const uint32_t q = d->q;

    // Slow multiplication of element indices, used only to build the tables.
    auto mul_slow = [&](uint32_t a, uint32_t b) -> uint32_t {
        if (m == 1) return (uint32_t)((uint64_t)a * b % p);
        Poly pa(m), pb(m);
        for (uint32_t i = 0; i < m; ++i) {
            pa[i] = a % p;
            a /= p;
            pb[i] = b % p;
            b /= p;
        }
        Poly prod(2 * m - 1, 0);
        for (uint32_t i = 0; i < m; ++i)
            for (uint32_t j = 0; j < m; ++j)
                prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)pa[i] * pb[j]) % p);
        Poly r = poly_mod(prod, d->modulus, p);
        uint32_t out = 0;
        for (size_t i = r.size(); i-- > 0;) out = out * p + r[i];
        return out;
    };

    d->log.assign(q, 0);
    d->exp.assign(2 * (q - 1), 1);
    if (q == 2) {
        d->gen = 1;
    } else {
        for (uint32_t g = 2; g < q; ++g) {
            std::vector<uint32_t> pow(q - 1);
            uint32_t x = 1;
            bool primitive = true;
            for (uint32_t i = 0; i < q - 1; ++i) {
                pow[i] = x;
                if (i > 0 && x == 1) {
                    primitive = false;
                    break;
                }
                x = mul_slow(x, g);
            }
            if (primitive && x == 1) {
                d->gen = g;
                for (uint32_t i = 0; i < q - 1; ++i) {
                    d->exp[i] = pow[i];
                    d->exp[i + q - 1] = pow[i];
                    d->log[pow[i]] = i;
                }
                break;
            }
        }
        if (d->gen == 0) throw std::logic_error("no generator found");
    }

    d->fact.assign(p, 1);
    for (uint32_t i = 1; i < p; ++i)
        d->fact[i] = (uint32_t)((uint64_t)d->fact[i - 1] * i % p);

    d_ = std::move(d);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    check(a);
    check(b);
    if (d_->m == 1) return (a + b) % d_->p;
    if (d_->p == 2) return a ^ b;
    uint32_t out = 0, mult = 1;
    const uint32_t p = d_->p;
    for (uint32_t i = 0; i < d_->m; ++i) {
        out += (a % p + b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    check(a);
    if (d_->m == 1) return (d_->p - a) % d_->p;
    if (d_->p == 2) return a;
    uint32_t out = 0, mult = 1;
    const uint32_t p = d_->p;
    for (uint32_t i = 0; i < d_->m; ++i) {
        out += (p - a % p) % p * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return d_->exp[d_->log[a] + d_->log[b]];
}

uint32_t Field::inv(uint32_t a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero in GF(q)");
    const uint32_t qm1 = d_->q - 1;
    return d_->exp[(qm1 - d_->log[a]) % qm1];
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    check(a);
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("zero to a negative power");
        return 0;
    }
    const int64_t qm1 = d_->q - 1;
    int64_t r = ((int64_t)d_->log[a] * (e % qm1)) % qm1;
    if (r < 0) r += qm1;
    return d_->exp[(size_t)r];
}

uint32_t Field::from_int(int64_t n) const {
    int64_t r = n % d_->p;
    if (r < 0) r += d_->p;
    return (uint32_t)r;
}

uint32_t Field::binom(uint64_t a, uint64_t b) const {
    if (b > a) return 0;
    const uint32_t p = d_->p;
    uint64_t res = 1;
    while (a > 0 || b > 0) {
        uint32_t ai = (uint32_t)(a % p), bi = (uint32_t)(b % p);
        if (bi > ai) return 0;
        // C(ai, bi) mod p from the factorial table
        uint64_t den = (uint64_t)d_->fact[bi] * d_->fact[ai - bi] % p;
        uint64_t di = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) di = di * base % p;
            base = base * base % p;
            e >>= 1;
        }
        res = res * d_->fact[ai] % p * di % p;
        a /= p;
        b /= p;
    }
    return (uint32_t)res;
}

std::string Field::describe() const {
    std::ostringstream os;
    if (d_->m == 1)
        os << "GF(" << d_->p << ")";
    else
        os << "GF(" << d_->p << "^" << d_->m << ")";
    return os.str();
}

}  // namespace grs
