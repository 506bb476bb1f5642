#pragma once

// Standard form f = a * prod(g_i) / b of a rational polynomial, fixed
// divisors, and membership in Int(Z).

#include "ivp_atoms/poly.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace ivp {

/// f = constant * prod(factors) / prod(p^e_p over denom).
///
/// Invariants established by `normalize`: gcd(constant, b) = 1, every
/// factor primitive with positive leading coefficient and degree >= 1,
/// factors non-empty. Repeated factors are allowed. An empty factor list
/// only appears inside factorization witnesses, where it denotes a constant.
struct StandardForm {
    Integer constant{1};
    std::map<Prime, unsigned> denom;
    std::vector<IntPoly> factors;

    Integer denominator() const {
        Integer b = 1;
        for (const auto& [p, e] : denom) b *= pow(p.value(), e);
        return b;
    }

    unsigned exponent(const Prime& p) const {
        auto it = denom.find(p);
        return it == denom.end() ? 0 : it->second;
    }

    std::vector<Prime> denominator_primes() const {
        std::vector<Prime> out;
        for (const auto& entry : denom) out.push_back(entry.first);
        return out;
    }

    bool squarefree_denominator() const {
        for (const auto& entry : denom)
            if (entry.second > 1) return false;
        return true;
    }

    bool is_constant() const { return factors.empty(); }

    /// prod(g_i), without the constant.
    IntPoly numerator_product() const { return product(factors); }

    /// constant * prod(g_i).
    IntPoly numerator() const { return constant * numerator_product(); }

    friend bool operator==(const StandardForm& a, const StandardForm& b) {
        return a.constant == b.constant && a.denom == b.denom && a.factors == b.factors;
    }
};

/// Brings raw data into standard form: factor contents and signs move into
/// the constant, gcd(a, b) is cancelled, b is made positive and factored.
/// Constant (degree 0) raw factors are folded into the constant.
inline StandardForm normalize(Integer raw_constant, std::span<const IntPoly> raw_factors,
                              Integer raw_denom) {
    if (raw_denom == 0) throw InputError("zero denominator");
    if (raw_constant == 0) throw InputError("zero polynomial has no standard form");
    StandardForm sf;
    Integer a = std::move(raw_constant);
    for (const auto& g : raw_factors) {
        if (g.is_zero()) throw InputError("zero factor");
        if (g.degree() == 0) {
            a *= g.leading();
            continue;
        }
        IntPoly prim = primitive_part(g);
        Integer unit_content = content(g);
        if (g.leading() < 0) unit_content = -unit_content;
        a *= unit_content;
        sf.factors.push_back(std::move(prim));
    }
    if (sf.factors.empty()) throw InputError("constant expression has no polynomial standard form");
    Integer b = std::move(raw_denom);
    if (b < 0) {
        b = -b;
        a = -a;
    }
    const Integer g = gcd(a, b);
    a /= g;
    b /= g;
    sf.constant = std::move(a);
    if (b != 1) sf.denom = factor_integer(b);
    return sf;
}

inline StandardForm normalize(Integer raw_constant, std::initializer_list<IntPoly> raw_factors,
                              Integer raw_denom) {
    return normalize(std::move(raw_constant), std::span<const IntPoly>(raw_factors.begin(), raw_factors.size()),
                     std::move(raw_denom));
}

/// Positive generator of the ideal generated by g(Z). A nonzero polynomial
/// of degree d cannot vanish at d+1 points, and the values at 0..d span the
/// same ideal as all values (binomial basis), so this gcd is exact.
inline Integer fixed_divisor(const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("fixed divisor of the zero polynomial");
    Integer d = 0;
    for (int w = 0; w <= g.degree(); ++w) d = gcd(d, g(Integer(w)));
    return d;
}

inline unsigned fixed_divisor_p(const IntPoly& g, const Prime& p) {
    return padic_valuation_finite(fixed_divisor(g), p);
}

/// Primes dividing fixed_divisor(g), ascending. For primitive g these are
/// all at most deg(g).
inline std::vector<Prime> relevant_primes(const IntPoly& g) {
    std::vector<Prime> out;
    for (const auto& entry : factor_integer(fixed_divisor(g))) out.push_back(entry.first);
    return out;
}

struct MembershipReport {
    bool is_member = false;
    bool is_image_primitive = false;
    Integer fd_numerator{1};
    std::map<Prime, unsigned> fd_numerator_factors;
    /// |a| * fd(prod g_i) / b; meaningful only when is_member.
    Integer fd_of_f{0};
};

inline MembershipReport is_member(const StandardForm& sf) {
    MembershipReport r;
    r.fd_numerator = fixed_divisor(sf.numerator_product());
    r.fd_numerator_factors = factor_integer(r.fd_numerator);
    r.is_member = true;
    for (const auto& [p, e] : sf.denom) {
        auto it = r.fd_numerator_factors.find(p);
        const unsigned have = it == r.fd_numerator_factors.end() ? 0 : it->second;
        if (e > have) r.is_member = false;
    }
    if (r.is_member) {
        r.fd_of_f = abs(sf.constant) * r.fd_numerator / sf.denominator();
        r.is_image_primitive = r.fd_of_f == 1;
    }
    return r;
}

/// "a*(g1)*(g2)^2/b"; parses back to the same standard form.
inline std::string to_expression(const StandardForm& sf) {
    std::string out;
    if (sf.constant == -1 && !sf.factors.empty())
        out += "-";
    else if (sf.constant != 1 || sf.factors.empty())
        out += sf.constant.str() + (sf.factors.empty() ? "" : "*");
    for (std::size_t i = 0; i < sf.factors.size();) {
        std::size_t j = i;
        while (j < sf.factors.size() && sf.factors[j] == sf.factors[i]) ++j;
        if (i > 0) out += "*";
        out += "(" + to_string(sf.factors[i]) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    const Integer b = sf.denominator();
    if (b != 1) out += "/" + b.str();
    return out;
}

} // namespace ivp
