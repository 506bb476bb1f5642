#pragma once

// Dense univariate polynomials with exact integer coefficients.

#include "ivp_atoms/integer.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ivp {

/// coeffs()[i] is the coefficient of x^i. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

    static IntPoly constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }
    static IntPoly x() { return IntPoly{0, 1}; }
    /// x - root
    static IntPoly linear_root(const Integer& root) { return IntPoly{-root, 1}; }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Horner evaluation.
    Integer operator()(const Integer& w) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
        return acc;
    }

    /// f(w) mod m in [0, m).
    Integer eval_mod(const Integer& w, const Integer& m) const {
        Integer acc = 0;
        const Integer wm = mod(w, m);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mod(acc * wm + *it, m);
        return acc;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(out));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Integer> out(a.coeffs_);
        for (auto& c : out) c = -c;
        return IntPoly(std::move(out));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(out));
    }
    friend IntPoly operator*(const Integer& c, const IntPoly& a) { return IntPoly::constant(c) * a; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    /// Degree first, then coefficients from the top; a total order for
    /// canonical sorting.
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        for (std::size_t i = a.coeffs_.size(); i-- > 0;)
            if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
        return false;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline IntPoly poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }
inline Integer poly_eval(const IntPoly& f, const Integer& w) { return f(w); }

inline IntPoly pow(const IntPoly& f, unsigned n) {
    IntPoly out = IntPoly::constant(1);
    for (unsigned i = 0; i < n; ++i) out = out * f;
    return out;
}

inline IntPoly product(std::span<const IntPoly> factors) {
    IntPoly out = IntPoly::constant(1);
    for (const auto& g : factors) out = out * g;
    return out;
}

/// Positive gcd of the coefficients.
inline Integer content(const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("content of the zero polynomial");
    Integer c = 0;
    for (const auto& a : g.coeffs()) c = gcd(c, a);
    return c;
}

inline bool is_primitive(const IntPoly& g) { return !g.is_zero() && content(g) == 1; }

/// g / content(g), sign-normalised so the leading coefficient is positive.
inline IntPoly primitive_part(const IntPoly& g) {
    Integer c = content(g);
    if (g.leading() < 0) c = -c;
    std::vector<Integer> out(g.coeffs());
    for (auto& a : out) a /= c;
    return IntPoly(std::move(out));
}

/// Quotient of f by d when d divides f in Z[x]; std::nullopt otherwise.
inline std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < d.degree()) return std::nullopt;
    std::vector<Integer> rem(f.coeffs());
    std::vector<Integer> quot(static_cast<std::size_t>(f.degree() - d.degree() + 1));
    const auto dd = static_cast<std::size_t>(d.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + dd];
        if (top % d.leading() != 0) return std::nullopt;
        quot[k] = top / d.leading();
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= quot[k] * d.coeffs()[i];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

/// Compact, re-parseable rendering such as "x^3-19" or "-2*x^2+x".
inline std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Integer& c = f.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = abs(c);
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += 'x';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace ivp
