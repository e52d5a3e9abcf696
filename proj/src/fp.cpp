/*
   Copyright 2026 the raynaud kernel authors

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

#include "raynaud/fp.hpp"

namespace raynaud {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_prime_modulus(std::uint32_t p) {
    if (p >= (1u << 31))
        throw std::invalid_argument("field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
}

FpElem::FpElem(std::uint64_t value, std::uint32_t p) : p_(p) {
    require_prime_modulus(p);
    v_ = static_cast<std::uint32_t>(value % p);
}

void FpElem::check_compatible(const FpElem& o) const {
    if (p_ == 0 || o.p_ == 0)
        throw std::logic_error("arithmetic on default-constructed FpElem");
    if (p_ != o.p_)
        throw std::logic_error("mixed moduli: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
}

FpElem FpElem::operator+(const FpElem& o) const {
    check_compatible(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= p_) s -= p_;
    FpElem r = *this;
    r.v_ = static_cast<std::uint32_t>(s);
    return r;
}

FpElem FpElem::operator-(const FpElem& o) const {
    check_compatible(o);
    FpElem r = *this;
    r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return r;
}

FpElem FpElem::operator*(const FpElem& o) const {
    check_compatible(o);
    FpElem r = *this;
    r.v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
    return r;
}

FpElem FpElem::operator-() const {
    FpElem r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

FpElem FpElem::pow(std::uint64_t k) const {
    if (p_ == 0) throw std::logic_error("pow on default-constructed FpElem");
    FpElem base = *this;
    FpElem acc(1, p_);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FpElem FpElem::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    return pow(std::uint64_t(p_) - 2);
}

FpElem FpElem::operator/(const FpElem& o) const {
    check_compatible(o);
    return *this * o.inverse();
}

FpElem fp_signed(std::int64_t v, std::uint32_t p) {
    std::int64_t m = v % std::int64_t(p);
    if (m < 0) m += p;
    return FpElem(std::uint64_t(m), p);
}

} // namespace raynaud
