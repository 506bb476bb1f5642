#pragma once

// Exact integers, primes and p-adic valuations.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivp {

using Integer = boost::multiprecision::cpp_int;

/// Malformed or out-of-scope input supplied by a caller (bad syntax, zero
/// denominator, non-member polynomial where membership is required, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force search would exceed its configured size limit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline std::string to_string(const Integer& n) { return n.str(); }

namespace detail {

inline bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s,
                               unsigned base) {
    Integer x = boost::multiprecision::powm(Integer(base), d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

/// Largest value for which `is_prime` is a proof rather than a guess: the
/// Miller-Rabin bases 2..41 have no strong pseudoprime below this bound.
inline const Integer& certified_prime_limit() {
    static const Integer limit("3317044064679887385961981");
    return limit;
}

/// Deterministic primality. Throws InputError when |n| is beyond
/// `certified_prime_limit()`.
inline bool is_prime(const Integer& value) {
    const Integer n = abs(value);
    if (n < 2) return false;
    static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= certified_prime_limit())
        throw InputError("cannot certify primality of " + n.str());
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned base : small)
        if (!detail::miller_rabin_round(n, d, s, base)) return false;
    return true;
}

/// A positive rational prime, checked at construction.
class Prime {
public:
    explicit Prime(Integer value) : value_(std::move(value)) {
        if (value_ < 2 || !is_prime(value_))
            throw InputError(value_.str() + " is not a prime");
    }
    explicit Prime(long long value) : Prime(Integer(value)) {}

    const Integer& value() const { return value_; }
    std::string str() const { return value_.str(); }

    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }
    friend bool operator<(const Prime& a, const Prime& b) { return a.value_ < b.value_; }

private:
    Integer value_;
};

/// v_p(n); std::nullopt stands for +infinity (n == 0).
using Valuation = std::optional<unsigned>;

inline Valuation padic_valuation(Integer n, const Prime& p) {
    if (n == 0) return std::nullopt;
    unsigned k = 0;
    const Integer& q = p.value();
    while (n % q == 0) {
        n /= q;
        ++k;
    }
    return k;
}

inline unsigned padic_valuation_finite(const Integer& n, const Prime& p) {
    auto v = padic_valuation(n, p);
    if (!v) throw std::domain_error("valuation of zero is infinite");
    return *v;
}

/// Trial division bound used by `factor_integer`.
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Prime factorisation of |n| (n != 0) by trial division up to
/// `kTrialDivisionBound`. A remaining cofactor is accepted only when it is
/// a certified prime; otherwise InputError is raised.
inline std::map<Prime, unsigned> factor_integer(const Integer& value) {
    if (value == 0) throw InputError("cannot factor zero");
    Integer n = abs(value);
    std::map<Prime, unsigned> out;
    auto strip = [&](std::uint32_t d) {
        unsigned k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        if (k > 0) out.emplace(Prime(Integer(d)), k);
    };
    strip(2);
    for (std::uint32_t d = 3; d <= kTrialDivisionBound; d += 2) {
        if (Integer(d) * d > n) break;
        strip(d);
    }
    if (n > 1) {
        const Integer bound = Integer(kTrialDivisionBound) * kTrialDivisionBound;
        bool prime = n <= bound;
        if (!prime) {
            if (n >= certified_prime_limit())
                throw InputError("integer " + value.str() +
                                 " exceeds the factorization effort bound");
            prime = is_prime(n);
        }
        if (!prime)
            throw InputError("integer " + value.str() +
                             " has prime factors beyond the factorization effort bound");
        out.emplace(Prime(n), 1);
    }
    return out;
}

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, k] : factor_integer(n)) {
        const std::size_t count = divs.size();
        Integer power = 1;
        for (unsigned e = 1; e <= k; ++e) {
            power *= p.value();
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline Integer pow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

/// Non-negative residue of n modulo m (m > 0).
inline Integer mod(const Integer& n, const Integer& m) {
    Integer r = n % m;
    if (r < 0) r += m;
    return r;
}

} // namespace ivp
