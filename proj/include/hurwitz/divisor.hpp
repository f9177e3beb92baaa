#pragma once

#include <map>
#include <string>

#include "hurwitz/multigraph.hpp"

namespace hurwitz {

/// Integer divisor: finitely supported Z-valued function on point ids. Zero
/// coefficients are never stored. One container serves every category
/// (vertices, metric-graph points, curve points).
template <class P = std::string>
class Divisor {
public:
    Divisor() = default;

    explicit Divisor(std::map<P, long long> coeffs) {
        for (auto& [p, c] : coeffs)
            if (c != 0) coefficients_.emplace(p, c);
    }

    long long at(const P& p) const {
        auto it = coefficients_.find(p);
        return it == coefficients_.end() ? 0 : it->second;
    }

    void add(const P& p, long long delta) {
        if (delta == 0) return;
        auto [it, inserted] = coefficients_.emplace(p, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) coefficients_.erase(it);
        }
    }

    const std::map<P, long long>& coefficients() const { return coefficients_; }

    long long degree() const {
        long long sum = 0;
        for (const auto& [p, c] : coefficients_) sum += c;
        return sum;
    }

    bool is_effective() const {
        for (const auto& [p, c] : coefficients_)
            if (c < 0) return false;
        return true;
    }

    bool is_zero() const { return coefficients_.empty(); }

    Divisor& operator+=(const Divisor& other) {
        for (const auto& [p, c] : other.coefficients_) add(p, c);
        return *this;
    }

    friend Divisor operator+(Divisor lhs, const Divisor& rhs) { return lhs += rhs; }

    Divisor operator-() const {
        Divisor out;
        for (const auto& [p, c] : coefficients_) out.coefficients_.emplace(p, -c);
        return out;
    }

    friend Divisor operator-(const Divisor& lhs, const Divisor& rhs) { return lhs + (-rhs); }

    friend Divisor operator*(long long scale, const Divisor& d) {
        Divisor out;
        if (scale != 0)
            for (const auto& [p, c] : d.coefficients_) out.coefficients_.emplace(p, scale * c);
        return out;
    }

    bool operator==(const Divisor&) const = default;

private:
    std::map<P, long long> coefficients_;
};

using VertexDivisor = Divisor<VertexId>;

/// K_G = sum_v (val(v) - 2)(v); degree 2g - 2.
inline VertexDivisor canonical_divisor(const Multigraph& g) {
    VertexDivisor k;
    for (const auto& v : g.vertices()) k.add(v, g.valency(v) - 2);
    return k;
}

}  // namespace hurwitz
