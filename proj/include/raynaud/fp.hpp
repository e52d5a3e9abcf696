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

#ifndef RAYNAUD_FP_HPP
#define RAYNAUD_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raynaud {

/// Trial-division primality test, enough for machine-width p at desk scale.
bool is_prime_u32(std::uint32_t p);

/// Checks p prime and < 2^31, throws std::invalid_argument otherwise.
void require_prime_modulus(std::uint32_t p);

/// An element of the prime field F_p. The residue is kept in [0, p).
class FpElem {
  public:
    FpElem() : v_(0), p_(0) {}
    FpElem(std::uint64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FpElem operator+(const FpElem& o) const;
    FpElem operator-(const FpElem& o) const;
    FpElem operator*(const FpElem& o) const;
    FpElem operator/(const FpElem& o) const;
    FpElem operator-() const;
    FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
    FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
    FpElem& operator*=(const FpElem& o) { return *this = *this * o; }

    bool operator==(const FpElem& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    FpElem inverse() const;
    FpElem pow(std::uint64_t k) const;

    std::string to_string() const { return std::to_string(v_); }

  private:
    void check_compatible(const FpElem& o) const;
    std::uint32_t v_;
    std::uint32_t p_;
};

inline FpElem fp(std::uint64_t v, std::uint32_t p) { return FpElem(v, p); }

/// Signed construction: maps negative integers to their residue.
FpElem fp_signed(std::int64_t v, std::uint32_t p);

} // namespace raynaud

#endif
