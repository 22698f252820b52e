#pragma once
#include "hypertoric/numeric.hpp"

#include <string>
#include <vector>

namespace hypertoric {

// Integer polynomial in one variable, coefficients ascending by degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(IntVec coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Int v) { return Poly(IntVec{std::move(v)}); }
    static Poly monomial(unsigned deg, Int coeff = 1) {
        IntVec c(deg + 1);
        c[deg] = std::move(coeff);
        return Poly(std::move(c));
    }
    // t - a
    static Poly linear(const Int& a) { return Poly(IntVec{-a, 1}); }

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
    const IntVec& coeffs() const { return c_; }
    Int coeff(unsigned k) const { return k < c_.size() ? c_[k] : Int(0); }

    Int eval(const Int& t) const {
        Int v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
        return v;
    }

    Poly operator+(const Poly& o) const {
        IntVec r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        IntVec r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        IntVec r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            Int a = abs(c_[i]);
            if (a != 1 || i == 0) s += a.str();
            if (i > 0) {
                if (a != 1) s += "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    IntVec c_;
};

} // namespace hypertoric
