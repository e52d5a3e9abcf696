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

#ifndef RAYNAUD_DIVISOR_HPP
#define RAYNAUD_DIVISOR_HPP

#include <cstdint>
#include <map>
#include <string>

namespace raynaud {

/// A closed point of the curve as the divisor calculus sees it: the named
/// rational point at infinity, or a symbolic tag carrying a residue degree
/// (conjugate clusters never materialize extension elements).
struct PointId {
    enum class Kind { Infinity, Named };
    Kind kind = Kind::Infinity;
    std::string tag;
    std::uint32_t residue_degree = 1;

    static PointId infinity() { return PointId{}; }
    static PointId named(std::string t, std::uint32_t resdeg = 1) {
        return PointId{Kind::Named, std::move(t), resdeg};
    }

    bool operator<(const PointId& o) const {
        if (kind != o.kind) return kind < o.kind;
        return tag < o.tag;
    }
    bool operator==(const PointId& o) const {
        return kind == o.kind && tag == o.tag && residue_degree == o.residue_degree;
    }
    std::string to_string() const {
        return kind == Kind::Infinity ? "inf" : tag;
    }
};

/// Point-supported divisor with integer coefficients.
class DivisorOnC {
  public:
    DivisorOnC() = default;

    static DivisorOnC infinity_times(std::int64_t k) {
        DivisorOnC d;
        d.add(PointId::infinity(), k);
        return d;
    }

    void add(const PointId& pt, std::int64_t k) {
        if (k == 0) return;
        auto it = c_.find(pt);
        if (it == c_.end()) {
            c_.emplace(pt, k);
        } else {
            it->second += k;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::int64_t coeff(const PointId& pt) const {
        auto it = c_.find(pt);
        return it == c_.end() ? 0 : it->second;
    }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (auto& [pt, k] : c_) d += k * std::int64_t(pt.residue_degree);
        return d;
    }

    bool is_zero() const { return c_.empty(); }
    bool effective() const {
        for (auto& [pt, k] : c_)
            if (k < 0) return false;
        return true;
    }

    DivisorOnC operator+(const DivisorOnC& o) const {
        DivisorOnC r = *this;
        for (auto& [pt, k] : o.c_) r.add(pt, k);
        return r;
    }
    DivisorOnC operator-(const DivisorOnC& o) const { return *this + (o * -1); }
    DivisorOnC operator*(std::int64_t s) const {
        DivisorOnC r;
        if (s == 0) return r;
        for (auto& [pt, k] : c_) r.c_.emplace(pt, k * s);
        return r;
    }
    bool operator==(const DivisorOnC& o) const { return c_ == o.c_; }
    bool operator!=(const DivisorOnC& o) const { return !(*this == o); }

    const std::map<PointId, std::int64_t>& support() const { return c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [pt, k] : c_) {
            if (!first) s += k >= 0 ? "+" : "";
            first = false;
            s += std::to_string(k) + "*" + pt.to_string();
        }
        return s;
    }

  private:
    std::map<PointId, std::int64_t> c_;
};

inline DivisorOnC operator*(std::int64_t s, const DivisorOnC& d) { return d * s; }

} // namespace raynaud

#endif
