#pragma once

#include <map>
#include <vector>

#include "chainopt/rational.hpp"
#include "chainopt/simplicial_complex.hpp"

namespace chainopt {

/// Sparse formal sum of n-simplices. Only nonzero coefficients are stored,
/// keyed by simplex id within the owning complex.
template <typename Coeff>
struct BasicChain {
    int dimension = 0;
    std::map<int, Coeff> coefficients;

    BasicChain() = default;
    explicit BasicChain(int dim) : dimension(dim) {}

    Coeff coefficient(int id) const {
        auto it = coefficients.find(id);
        return it == coefficients.end() ? Coeff(0) : it->second;
    }

    void set(int id, const Coeff& value) {
        if (value == 0)
            coefficients.erase(id);
        else
            coefficients[id] = value;
    }

    void add(int id, const Coeff& delta) {
        auto it = coefficients.find(id);
        if (it == coefficients.end()) {
            if (delta != 0) coefficients[id] = delta;
            return;
        }
        it->second += delta;
        if (it->second == 0) coefficients.erase(it);
    }

    bool is_zero() const { return coefficients.empty(); }

    BasicChain operator-() const {
        BasicChain out(dimension);
        for (const auto& [id, c] : coefficients) out.coefficients[id] = -c;
        return out;
    }

    BasicChain& operator+=(const BasicChain& other) {
        for (const auto& [id, c] : other.coefficients) add(id, c);
        return *this;
    }

    BasicChain& operator-=(const BasicChain& other) {
        for (const auto& [id, c] : other.coefficients) add(id, Coeff(-c));
        return *this;
    }

    BasicChain& operator*=(const Coeff& k) {
        if (k == 0) {
            coefficients.clear();
            return *this;
        }
        for (auto& [id, c] : coefficients) c *= k;
        return *this;
    }

    friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
    friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
    friend bool operator==(const BasicChain& a, const BasicChain& b) {
        return a.dimension == b.dimension && a.coefficients == b.coefficients;
    }
};

/// Integer chain.
using Chain = BasicChain<Int>;
/// Chain with rational coefficients, e.g. an uncertified LP vertex.
using RationalChain = BasicChain<Rational>;

inline RationalChain to_rational(const Chain& c) {
    RationalChain out(c.dimension);
    for (const auto& [id, v] : c.coefficients) out.coefficients[id] = Rational(v);
    return out;
}

/// Returns the integer chain equal to c, or nullopt if any coefficient is
/// not an integer.
inline std::optional<Chain> to_integer(const RationalChain& c) {
    Chain out(c.dimension);
    for (const auto& [id, v] : c.coefficients) {
        if (!is_integer(v)) return std::nullopt;
        out.coefficients[id] = numerator(v);
    }
    return out;
}

/// One nonnegative rational weight per n-simplex; defines the weighted
/// l1 norm on n-chains.
struct WeightAssignment {
    int dimension = 0;
    std::vector<Rational> weights;

    WeightAssignment() = default;
    WeightAssignment(int dim, std::vector<Rational> w) : dimension(dim), weights(std::move(w)) {
        for (const auto& x : weights)
            if (x < 0) throw Error("negative weight");
    }

    static WeightAssignment unit(const SimplicialComplex& X, int n) {
        return WeightAssignment(n, std::vector<Rational>(X.size(n), Rational(1)));
    }

    const Rational& operator[](int id) const { return weights.at(id); }
};

/// Weighted l1 norm: sum of w_sigma * |c_sigma|, exact.
template <typename Coeff>
Rational l1_norm(const BasicChain<Coeff>& c, const WeightAssignment& w) {
    if (c.dimension != w.dimension) throw Error("l1_norm: chain/weight dimension mismatch");
    Rational total(0);
    for (const auto& [id, v] : c.coefficients) {
        Coeff a = v < 0 ? Coeff(-v) : v;
        total += w[id] * Rational(a);
    }
    return total;
}

}  // namespace chainopt
