#pragma once

// Best-effort irreducibility checks for numerator factors in Z[x].
//
// Two sound tests are combined:
//  * rational roots, for degree <= 3 (no rational root => irreducible);
//  * irreducibility modulo a small prime p not dividing the leading
//    coefficient (an irreducible reduction of the same degree lifts).

#include "ivp_atoms/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ivp {

enum class IrreducibilityStatus { proven, unknown };

namespace fp {

// Polynomials over F_p, p < 2^31; index i = coefficient of x^i, trimmed.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

inline Poly reduce(const IntPoly& f, std::int64_t p) {
    Poly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(static_cast<std::int64_t>(mod(c, Integer(p))));
    trim(out);
    return out;
}

/// Remainder of a modulo a nonzero b.
inline Poly rem(Poly a, const Poly& b, std::int64_t p) {
    const std::int64_t inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t factor = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return rem(std::move(out), m, p);
}

inline Poly pow_mod(Poly base, std::int64_t e, const Poly& m, std::int64_t p) {
    Poly result{1};
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, m, p);
        base = mul_mod(base, base, m, p);
        e >>= 1;
    }
    return rem(std::move(result), m, p);
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: f of degree d is irreducible over F_p iff
/// gcd(x^(p^i) - x, f) = 1 for 1 <= i <= d/2.
inline bool is_irreducible(const Poly& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        h = pow_mod(h, p, f, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        if (gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

} // namespace fp

/// A rational root s/t (t > 0, gcd(s,t) = 1) of f.
struct RationalRoot {
    Integer numerator;
    Integer denominator;
};

/// Result of the rational root search. `complete` is false when the
/// constant or leading coefficient could not be factored.
struct RationalRootSearch {
    std::optional<RationalRoot> root;
    bool complete = true;
};

inline RationalRootSearch find_rational_root(const IntPoly& f) {
    if (f.degree() < 1) return {};
    if (f.coeff(0) == 0) return {RationalRoot{0, 1}, true};
    std::vector<Integer> nums, dens;
    try {
        nums = positive_divisors(f.coeff(0));
        dens = positive_divisors(f.leading());
    } catch (const InputError&) {
        return {std::nullopt, false};
    }
    for (const auto& t : dens) {
        for (const auto& s : nums) {
            if (gcd(s, t) != 1) continue;
            for (const Integer& cand : {Integer(s), Integer(-s)}) {
                // t^d f(s/t) = sum c_i s^i t^(d-i)
                Integer acc = 0;
                Integer tpow = 1;
                const auto& c = f.coeffs();
                for (std::size_t i = c.size(); i-- > 0;) {
                    acc = acc * cand + c[i] * tpow;
                    tpow *= t;
                }
                if (acc == 0) return {RationalRoot{cand, t}, true};
            }
        }
    }
    return {};
}

/// Upper degree for the modular irreducibility test.
inline constexpr int kModularTestMaxDegree = 12;

/// Proven is a proof of irreducibility in Z[x]; unknown is not a disproof.
inline IrreducibilityStatus verify_irreducible_best_effort(const IntPoly& g) {
    if (g.degree() < 1) throw std::invalid_argument("irreducibility check needs degree >= 1");
    if (!is_primitive(g)) throw std::invalid_argument("irreducibility check needs a primitive polynomial");
    if (g.degree() == 1) return IrreducibilityStatus::proven;
    if (g.degree() <= 3) {
        const auto search = find_rational_root(g);
        if (search.root) return IrreducibilityStatus::unknown;
        if (search.complete) return IrreducibilityStatus::proven;
    }
    if (g.degree() > kModularTestMaxDegree) return IrreducibilityStatus::unknown;
    for (std::int64_t p = 2; p <= 100; ++p) {
        if (!is_prime(Integer(p))) continue;
        if (g.leading() % p == 0) continue;
        if (fp::is_irreducible(fp::reduce(g, p), p)) return IrreducibilityStatus::proven;
    }
    return IrreducibilityStatus::unknown;
}

/// Splits off primitive linear factors for every rational root of g.
/// Returns primitive factors whose product is +-g; the last entry is the
/// root-free cofactor (omitted when it is a unit).
inline std::vector<IntPoly> split_rational_roots(const IntPoly& g) {
    std::vector<IntPoly> out;
    IntPoly rest = primitive_part(g);
    while (rest.degree() >= 2) {
        const auto search = find_rational_root(rest);
        if (!search.root) break;
        IntPoly linear{-search.root->numerator, search.root->denominator};
        auto quotient = divide_exact(rest, linear);
        if (!quotient) throw std::logic_error("rational root did not divide in Z[x]");
        out.push_back(primitive_part(linear));
        rest = primitive_part(*quotient);
    }
    if (rest.degree() >= 1) out.push_back(rest);
    return out;
}

} // namespace ivp
