#pragma once

// Brute-force ground truth for small inputs.
//
// Every divisor in Int(Z) of f^n (f image-primitive) has the shape
// prod(u_k^gamma_k) / prod(p^beta_p), u_k the distinct numerator factors,
// so divisors, atoms and factorizations of f^n are enumerated over exponent
// vectors instead of coefficients. Membership of a shape is decided from
// truncated valuation profiles v_p(u_k(w)) over residues w mod p^(n e_p),
// independently of the gcd-of-values fixed divisor used elsewhere.

#include "ivp_atoms/criteria.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ivp {

struct OracleLimits {
    /// Cap on the exponent grid size prod(n m_k + 1) * prod(n e_p + 1) and on
    /// the residue count p^(n e_p) per prime.
    std::uint64_t max_shapes = 10'000'000;
    /// Largest power of f examined by factorization searches.
    unsigned max_power = 4;
};

/// gamma indexes the distinct numerator factors (first-appearance order),
/// beta the denominator primes in ascending order.
struct DivisorShape {
    std::vector<unsigned> gamma;
    std::vector<unsigned> beta;

    friend auto operator<=>(const DivisorShape&, const DivisorShape&) = default;
    friend bool operator==(const DivisorShape&, const DivisorShape&) = default;

    bool is_zero() const {
        for (unsigned g : gamma)
            if (g) return false;
        for (unsigned b : beta)
            if (b) return false;
        return true;
    }

    /// Componentwise <=.
    bool divides(const DivisorShape& other) const {
        for (std::size_t i = 0; i < gamma.size(); ++i)
            if (gamma[i] > other.gamma[i]) return false;
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (beta[i] > other.beta[i]) return false;
        return true;
    }

    friend DivisorShape operator-(DivisorShape a, const DivisorShape& b) {
        for (std::size_t i = 0; i < a.gamma.size(); ++i) a.gamma[i] -= b.gamma[i];
        for (std::size_t i = 0; i < a.beta.size(); ++i) a.beta[i] -= b.beta[i];
        return a;
    }
    friend DivisorShape operator+(DivisorShape a, const DivisorShape& b) {
        for (std::size_t i = 0; i < a.gamma.size(); ++i) a.gamma[i] += b.gamma[i];
        for (std::size_t i = 0; i < a.beta.size(); ++i) a.beta[i] += b.beta[i];
        return a;
    }
};

inline std::string to_string(const DivisorShape& s) {
    std::string out = "gamma=(";
    for (std::size_t i = 0; i < s.gamma.size(); ++i) out += (i ? "," : "") + std::to_string(s.gamma[i]);
    out += ") beta=(";
    for (std::size_t i = 0; i < s.beta.size(); ++i) out += (i ? "," : "") + std::to_string(s.beta[i]);
    return out + ")";
}

/// A factorization of f^n into atoms, atoms sorted ascending.
struct Factorization {
    std::vector<DivisorShape> atoms;
    int sign = 1;
};

/// Same length and, after sorting, pairwise associated atoms. Shapes carry
/// no sign, so association of shapes is equality.
inline bool essentially_same(const Factorization& a, const Factorization& b) {
    if (a.atoms.size() != b.atoms.size()) return false;
    auto x = a.atoms, y = b.atoms;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

/// Distinct numerator factors of a standard form with multiplicities.
struct FactorClasses {
    std::vector<IntPoly> distinct;
    std::vector<unsigned> multiplicity;
    std::vector<std::size_t> class_of;

    explicit FactorClasses(const std::vector<IntPoly>& factors) {
        for (const auto& g : factors) {
            auto it = std::find(distinct.begin(), distinct.end(), g);
            if (it == distinct.end()) {
                class_of.push_back(distinct.size());
                distinct.push_back(g);
                multiplicity.push_back(1);
            } else {
                const auto k = static_cast<std::size_t>(it - distinct.begin());
                class_of.push_back(k);
                ++multiplicity[k];
            }
        }
    }
};

/// Divisors of f^n in Int(Z) for an image-primitive member f.
class DivisorLattice {
public:
    DivisorLattice(const StandardForm& sf, unsigned n, const OracleLimits& limits = {})
        : sf_(sf), n_(n), classes_(sf.factors) {
        if (n == 0) throw std::invalid_argument("power must be at least 1");
        if (sf.is_constant()) throw InputError("constant input has no divisor lattice");
        if (!ivp::is_member(sf).is_image_primitive)
            throw InputError("divisor enumeration needs an image-primitive member of Int(Z)");
        for (const auto& [p, e] : sf.denom) {
            primes_.push_back(p);
            exponents_.push_back(e);
        }
        std::uint64_t total = 1;
        auto grow = [&](std::uint64_t radix) {
            radices_.push_back(radix);
            if (total > limits.max_shapes / radix) throw GuardError(guard_message(limits));
            total *= radix;
        };
        for (unsigned m : classes_.multiplicity) grow(std::uint64_t{n} * m + 1);
        for (unsigned e : exponents_) grow(std::uint64_t{n} * e + 1);
        grid_size_ = total;
        for (std::size_t pi = 0; pi < primes_.size(); ++pi) build_profiles(pi, limits);
        enumerate();
    }

    const StandardForm& form() const { return sf_; }
    unsigned power() const { return n_; }
    const FactorClasses& classes() const { return classes_; }
    const std::vector<Prime>& primes() const { return primes_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    std::uint64_t grid_size() const { return grid_size_; }

    /// Sorted ascending.
    const std::vector<DivisorShape>& divisors() const { return divisors_; }

    DivisorShape unit() const {
        return {std::vector<unsigned>(classes_.distinct.size(), 0), std::vector<unsigned>(primes_.size(), 0)};
    }
    /// Shape of f itself.
    DivisorShape base() const { return {classes_.multiplicity, exponents_}; }
    /// Shape of f^n.
    DivisorShape full() const {
        DivisorShape s = base();
        for (auto& g : s.gamma) g *= n_;
        for (auto& b : s.beta) b *= n_;
        return s;
    }

    /// h is in Int(Z). Requires h to lie in the exponent grid of f^n.
    bool is_member(const DivisorShape& h) const {
        for (std::size_t pi = 0; pi < primes_.size(); ++pi)
            if (h.beta[pi] > truncated_fd(h.gamma, pi)) return false;
        return true;
    }

    /// h and f^n / h are both in Int(Z).
    bool is_divisor(const DivisorShape& h) const {
        if (!in_grid(h)) return false;
        return flags_[encode(h)];
    }

    /// h is a non-unit divisor of f^n that is not the product of two
    /// non-unit members of Int(Z).
    bool is_atom(const DivisorShape& h) const {
        if (!is_divisor(h) || h.is_zero()) return false;
        for (const auto& d : divisors_) {
            if (d.is_zero() || d == h || !d.divides(h)) continue;
            if (is_divisor(h - d)) return false;
        }
        return true;
    }

    /// Atoms among the divisors, ascending.
    const std::vector<DivisorShape>& atoms() const {
        if (!atoms_) {
            atoms_.emplace();
            for (const auto& d : divisors_)
                if (is_atom(d)) atoms_->push_back(d);
        }
        return *atoms_;
    }

    /// The element of Q[x] a shape stands for.
    StandardForm to_standard_form(const DivisorShape& h) const {
        StandardForm out;
        for (std::size_t k = 0; k < h.gamma.size(); ++k)
            for (unsigned c = 0; c < h.gamma[k]; ++c) out.factors.push_back(classes_.distinct[k]);
        for (std::size_t pi = 0; pi < h.beta.size(); ++pi)
            if (h.beta[pi] > 0) out.denom[primes_[pi]] = h.beta[pi];
        return out;
    }

    /// Visits factorizations of f^n into atoms in canonical (non-decreasing
    /// atom) order until `visit` returns false. Returns false if stopped.
    bool for_each_factorization(const std::function<bool(const Factorization&)>& visit) const {
        const auto& atom_list = atoms();
        std::vector<std::size_t> chosen;
        std::set<std::pair<std::uint64_t, std::size_t>> dead_ends;
        bool stopped = false;
        std::function<bool(const DivisorShape&, std::size_t)> dfs = [&](const DivisorShape& rest,
                                                                          std::size_t start) -> bool {
            if (rest.is_zero()) {
                Factorization f;
                for (std::size_t idx : chosen) f.atoms.push_back(atom_list[idx]);
                if (!visit(f)) stopped = true;
                return true;
            }
            const auto key = std::make_pair(encode(rest), start);
            if (dead_ends.count(key)) return false;
            bool found = false;
            for (std::size_t idx = start; idx < atom_list.size() && !stopped; ++idx) {
                const auto& a = atom_list[idx];
                if (!a.divides(rest)) continue;
                const DivisorShape next = rest - a;
                if (!is_divisor(next)) continue;
                chosen.push_back(idx);
                found = dfs(next, idx) || found;
                chosen.pop_back();
            }
            if (!found && !stopped) dead_ends.insert(key);
            return found;
        };
        dfs(full(), 0);
        return !stopped;
    }

private:
    static std::string guard_message(const OracleLimits& limits) {
        return "oracle search size exceeds the guard of " + std::to_string(limits.max_shapes) + " shapes";
    }

    bool in_grid(const DivisorShape& h) const {
        if (h.gamma.size() != classes_.distinct.size() || h.beta.size() != primes_.size()) return false;
        for (std::size_t i = 0; i < h.gamma.size(); ++i)
            if (h.gamma[i] >= radices_[i]) return false;
        for (std::size_t i = 0; i < h.beta.size(); ++i)
            if (h.beta[i] >= radices_[h.gamma.size() + i]) return false;
        return true;
    }

    std::uint64_t encode(const DivisorShape& h) const {
        std::uint64_t code = 0;
        std::size_t r = 0;
        for (unsigned g : h.gamma) code = code * radices_[r++] + g;
        for (unsigned b : h.beta) code = code * radices_[r++] + b;
        return code;
    }

    void build_profiles(std::size_t pi, const OracleLimits& limits) {
        const unsigned bound = n_ * exponents_[pi];
        const Integer modulus_big = pow(primes_[pi].value(), bound);
        if (modulus_big > Integer(limits.max_shapes)) throw GuardError(guard_message(limits));
        const auto modulus = static_cast<std::int64_t>(modulus_big);
        const auto p = static_cast<std::int64_t>(primes_[pi].value());

        std::vector<std::vector<std::int64_t>> reduced;
        for (const auto& u : classes_.distinct) {
            std::vector<std::int64_t> c;
            for (const auto& a : u.coeffs()) c.push_back(static_cast<std::int64_t>(mod(a, modulus_big)));
            reduced.push_back(std::move(c));
        }
        std::set<std::vector<unsigned>> seen;
        for (std::int64_t w = 0; w < modulus; ++w) {
            std::vector<unsigned> profile;
            for (const auto& c : reduced) {
                std::int64_t acc = 0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * w + *it) % modulus;
                unsigned v = 0;
                if (acc == 0) {
                    v = bound;
                } else {
                    while (acc % p == 0) {
                        acc /= p;
                        ++v;
                    }
                }
                profile.push_back(v);
            }
            seen.insert(std::move(profile));
        }
        // Drop profiles dominated componentwise by another; they never attain the minimum.
        std::vector<std::vector<unsigned>> minimal;
        for (const auto& a : seen) {
            bool dominated = false;
            for (const auto& b : seen) {
                if (a == b) continue;
                bool le = true;
                for (std::size_t k = 0; k < a.size() && le; ++k) le = b[k] <= a[k];
                if (le) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) minimal.push_back(a);
        }
        profiles_.push_back(std::move(minimal));
    }

    /// min(n e_p, fd_p(prod u_k^gamma_k)).
    unsigned truncated_fd(const std::vector<unsigned>& gamma, std::size_t pi) const {
        const unsigned bound = n_ * exponents_[pi];
        unsigned best = bound;
        for (const auto& profile : profiles_[pi]) {
            std::uint64_t sum = 0;
            for (std::size_t k = 0; k < gamma.size(); ++k) sum += std::uint64_t{gamma[k]} * profile[k];
            if (sum < best) best = static_cast<unsigned>(sum);
        }
        return best;
    }

    void enumerate() {
        flags_.assign(grid_size_, false);
        const std::size_t nk = classes_.distinct.size();
        const std::size_t np = primes_.size();
        const DivisorShape top = full();
        std::vector<unsigned> gamma(nk, 0);
        while (true) {
            std::vector<unsigned> complement(nk);
            for (std::size_t k = 0; k < nk; ++k) complement[k] = top.gamma[k] - gamma[k];
            std::vector<unsigned> lo(np), hi(np);
            bool empty = false;
            for (std::size_t pi = 0; pi < np; ++pi) {
                const unsigned bound = top.beta[pi];
                const unsigned other = truncated_fd(complement, pi);
                lo[pi] = bound - other;
                hi[pi] = truncated_fd(gamma, pi);
                if (lo[pi] > hi[pi]) empty = true;
            }
            if (!empty) {
                DivisorShape s{gamma, lo};
                while (true) {
                    flags_[encode(s)] = true;
                    divisors_.push_back(s);
                    bool advanced = false;
                    for (std::size_t pi = np; pi-- > 0;) {
                        if (s.beta[pi] < hi[pi]) {
                            ++s.beta[pi];
                            advanced = true;
                            break;
                        }
                        s.beta[pi] = lo[pi];
                    }
                    if (!advanced) break;
                }
            }
            std::size_t k = nk;
            bool done = true;
            while (k > 0) {
                --k;
                if (gamma[k] < top.gamma[k]) {
                    ++gamma[k];
                    done = false;
                    break;
                }
                gamma[k] = 0;
            }
            if (done) break;
        }
        std::sort(divisors_.begin(), divisors_.end());
    }

    StandardForm sf_;
    unsigned n_;
    FactorClasses classes_;
    std::vector<Prime> primes_;
    std::vector<unsigned> exponents_;
    std::vector<std::uint64_t> radices_;
    std::uint64_t grid_size_ = 0;
    std::vector<std::vector<std::vector<unsigned>>> profiles_;
    std::vector<bool> flags_;
    std::vector<DivisorShape> divisors_;
    mutable std::optional<std::vector<DivisorShape>> atoms_;
};

inline std::vector<DivisorShape> enumerate_divisors(const StandardForm& sf, unsigned n,
                                                    const OracleLimits& limits = {}) {
    return DivisorLattice(sf, n, limits).divisors();
}

inline bool is_atom_bruteforce(const DivisorShape& h, const StandardForm& sf, unsigned n,
                               const OracleLimits& limits = {}) {
    return DivisorLattice(sf, n, limits).is_atom(h);
}

inline std::vector<Factorization> enumerate_factorizations(const DivisorLattice& lattice) {
    std::vector<Factorization> out;
    lattice.for_each_factorization([&](const Factorization& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const Factorization& a, const Factorization& b) { return a.atoms < b.atoms; });
    return out;
}

inline std::vector<Factorization> enumerate_factorizations(const StandardForm& sf, unsigned n,
                                                           const OracleLimits& limits = {}) {
    if (n > limits.max_power) throw GuardError("power " + std::to_string(n) + " exceeds the oracle limit");
    return enumerate_factorizations(DivisorLattice(sf, n, limits));
}

/// f is an atom of Int(Z) (brute force at n = 1).
inline bool is_atom_bruteforce(const StandardForm& sf, const OracleLimits& limits = {}) {
    const DivisorLattice lattice(sf, 1, limits);
    return lattice.is_atom(lattice.base());
}

struct ScanResult {
    /// Smallest n with an essentially different factorization of f^n.
    std::optional<unsigned> disproven_at;
    std::optional<Factorization> factorization;
    unsigned checked_up_to = 0;
};

/// Searches n = 1..n_max for a factorization of f^n other than f*...*f.
/// Requires f to be an atom.
inline ScanResult absolute_irreducibility_scan(const StandardForm& sf, unsigned n_max,
                                               const OracleLimits& limits = {}) {
    if (n_max > limits.max_power) throw GuardError("power " + std::to_string(n_max) + " exceeds the oracle limit");
    if (!is_atom_bruteforce(sf, limits)) throw std::invalid_argument("scan needs an atom of Int(Z)");
    ScanResult result;
    for (unsigned n = 1; n <= n_max; ++n) {
        const DivisorLattice lattice(sf, n, limits);
        const Factorization trivial{std::vector<DivisorShape>(n, lattice.base()), 1};
        lattice.for_each_factorization([&](const Factorization& f) {
            if (essentially_same(f, trivial)) return true;
            result.factorization = f;
            return false;
        });
        result.checked_up_to = n;
        if (result.factorization) {
            result.disproven_at = n;
            break;
        }
    }
    return result;
}

struct LemmaViolation {
    DivisorShape divisor;
    std::string description;
};

/// For each divisor h and each factor g_j quintessential for q:
/// beta_q(h) = e_q * gamma_j(h), and factors quintessential for the same q
/// share their exponent.
inline std::vector<LemmaViolation> verify_lemma_exponents(const DivisorLattice& lattice,
                                                          const std::vector<DivisorShape>& divisors,
                                                          const ClassificationGrid& grid) {
    std::vector<LemmaViolation> out;
    const auto& primes = lattice.primes();
    const auto& classes = lattice.classes();
    for (const auto& h : divisors) {
        for (std::size_t qi = 0; qi < primes.size(); ++qi) {
            const auto gi = grid.prime_index(primes[qi]);
            if (!gi) continue;
            const auto quint = grid.indices_at_least(*gi, FactorKind::quintessential);
            const unsigned e = lattice.exponents()[qi];
            for (std::size_t j : quint) {
                const unsigned gamma = h.gamma[classes.class_of[j]];
                if (h.beta[qi] != e * gamma)
                    out.push_back({h, "beta_" + primes[qi].str() + " = " + std::to_string(h.beta[qi]) +
                                          " but e*gamma_" + std::to_string(j + 1) + " = " +
                                          std::to_string(e * gamma)});
            }
            for (std::size_t a = 0; a + 1 < quint.size(); ++a) {
                const unsigned ga = h.gamma[classes.class_of[quint[a]]];
                const unsigned gb = h.gamma[classes.class_of[quint[a + 1]]];
                if (ga != gb)
                    out.push_back({h, "gamma_" + std::to_string(quint[a] + 1) + " != gamma_" +
                                          std::to_string(quint[a + 1] + 1) + " for prime " + primes[qi].str()});
            }
        }
    }
    return out;
}

inline std::vector<LemmaViolation> verify_lemma_exponents(const StandardForm& sf, unsigned n,
                                                          const OracleLimits& limits = {}) {
    const DivisorLattice lattice(sf, n, limits);
    const ClassificationGrid grid = classify_all(sf.factors, relevant_primes(sf.numerator_product()));
    return verify_lemma_exponents(lattice, lattice.divisors(), grid);
}

} // namespace ivp
