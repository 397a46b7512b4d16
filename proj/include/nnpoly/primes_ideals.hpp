/**
 * @file primes_ideals.hpp
 * @brief Prime elements of N0[x]* and the witnesses that no other atom is
 *        prime; finitely generated prime ideals; the valuations and prime
 *        ideal families of P0; bounded membership searches for E, A_lambda
 *        and the root closure.
 */
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourier_motzkin.hpp"
#include "int_factor.hpp"
#include "nn_factor.hpp"
#include "zx_factor.hpp"

namespace nnpoly {

/// The prime elements are exactly x and the prime integers.
inline bool is_prime_element(const NNPoly& f)
{
    if (f.is_one())
        throw domain_error("is_prime_element: 1 is the unit of N0[x]*");
    if (f == NNPoly::x())
        return true;
    return f.is_constant() && is_prime(f.leading());
}

/// Irreducibility in Z[x], constants included (+-p for a prime p).
inline bool is_irreducible_in_zx(const ZPoly& f, const KroneckerLimits& limits = {})
{
    if (f.is_zero())
        return false;
    if (f.is_constant())
        return is_prime(abs(f.leading()));
    return content(f) == 1 && is_irreducible_z(f, limits);
}

/// z together with the primes used to build it.
struct Lemma3Witness {
    ZPoly z;
    Int p; ///< Eisenstein prime
    Int q;
    std::vector<NNPoly> products; ///< f_i * z, all in N0[x]*
};

/**
 * For atoms f_1..f_m of degree >= 1 other than x: with n = max deg f_i,
 * q the least prime >= max f_i(1) and p the least prime != q,
 *   z = q(p+1) x^{2n} - p x^n + pq * (every other power below 2n).
 * z is irreducible by Eisenstein at p, lies outside N0[x]*, and every
 * f_i z lies in N0[x]*. All of this is checked before returning.
 */
inline Lemma3Witness lemma3_z(const std::vector<NNPoly>& atoms)
{
    if (atoms.empty())
        throw domain_error("lemma3_z: at least one atom is required");
    std::size_t n = 0;
    Int max_at_one = 0;
    for (const auto& f : atoms) {
        if (f.degree() == 0)
            throw domain_error("lemma3_z: " + f.coeffs().front().str() + " is constant");
        if (f == NNPoly::x())
            throw domain_error("lemma3_z: x is excluded");
        if (!is_atom(f))
            throw domain_error("lemma3_z: argument is not an atom");
        n = std::max(n, f.degree());
        max_at_one = std::max(max_at_one, f.eval(Int(1)));
    }
    Lemma3Witness w;
    w.q = next_prime(max_at_one);
    w.p = w.q == 2 ? Int(3) : Int(2);
    std::vector<Int> c(2 * n + 1, w.p * w.q);
    c[n] = -w.p;
    c[2 * n] = w.q * (w.p + 1);
    w.z = ZPoly(std::move(c));

    const ZPoly& z = w.z;
    const bool outside = !is_nonneg(z);
    bool eisenstein = z.leading() % w.p != 0 && z.constant_term() % (w.p * w.p) != 0;
    for (std::size_t k = 0; k < z.degree(); ++k)
        eisenstein = eisenstein && z[k] % w.p == 0;
    if (!outside || !eisenstein || z.degree() != 2 * n)
        throw error("lemma3_z: postcondition failed for z");
    for (const auto& f : atoms) {
        auto prod = to_nn(f.z() * z);
        if (!prod)
            throw error("lemma3_z: postcondition failed: f*z has a negative coefficient");
        w.products.push_back(*prod);
    }
    return w;
}

/// f | gh in N0[x]* while f divides neither g nor h.
struct NonPrimalityWitness {
    NNPoly f;
    NNPoly h;
    ZPoly z;
    NNPoly g; ///< f * z
    Int eisenstein_p;

    struct Checks {
        bool z_outside = false;        ///< z not in N0[x]*
        bool g_in_monoid = false;      ///< g = f z in N0[x]*
        bool hz_in_monoid = false;     ///< h z in N0[x]*
        bool f_divides_gh = false;     ///< f |_N g h
        bool f_not_divides_g = false;  ///< not f |_N g
        bool f_not_divides_h = false;  ///< not f |_N h
        bool z_eisenstein = false;     ///< z irreducible (Eisenstein at eisenstein_p)
        bool no_prime_divides_g = false;

        bool all() const
        {
            return z_outside && g_in_monoid && hz_in_monoid && f_divides_gh && f_not_divides_g && f_not_divides_h &&
                   z_eisenstein && no_prime_divides_g;
        }
    };

    Checks check() const
    {
        Checks c;
        c.z_outside = z.is_zero() || !is_nonneg(z);
        c.g_in_monoid = g.z() == f.z() * z;
        auto hz = to_nn(h.z() * z);
        c.hz_in_monoid = hz.has_value();
        c.f_divides_gh = divides_N(f, g * h);
        c.f_not_divides_g = !divides_N(f, g);
        c.f_not_divides_h = !divides_N(f, h);
        const Int& p = eisenstein_p;
        bool eis = p > 1 && z.leading() % p != 0 && z.constant_term() % (p * p) != 0;
        for (std::size_t k = 0; k < z.degree(); ++k)
            eis = eis && z[k] % p == 0;
        c.z_eisenstein = eis;
        // A prime element divides g only through its content or a factor x.
        c.no_prime_divides_g = content(g) == 1 && g.constant_term() != 0;
        return c;
    }
};

inline NonPrimalityWitness non_primality_witness(const NNPoly& f)
{
    if (f.degree() == 0 || f == NNPoly::x() || !is_atom(f))
        throw domain_error("non_primality_witness: argument must be an atom of degree >= 1 other than x");
    NNPoly h;
    for (Int c = 1;; ++c) {
        NNPoly cand{c, 1};
        if (!divides_N(f, cand)) {
            h = cand;
            break;
        }
    }
    Lemma3Witness l3 = lemma3_z({f, h});
    NonPrimalityWitness w{f, h, l3.z, l3.products.front(), l3.p};
    if (!w.check().all())
        throw error("non_primality_witness: witness failed verification");
    return w;
}

/// Generators of an ideal of N0[x]*, reduced to the minimal antichain.
class IdealGens {
public:
    IdealGens() = default;

    explicit IdealGens(std::vector<NNPoly> gens)
    {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                redundant = i != j && divides_N(gens[j], gens[i]);
            if (!redundant)
                gens_.push_back(gens[i]);
        }
    }

    const std::vector<NNPoly>& generators() const noexcept { return gens_; }
    bool empty() const noexcept { return gens_.empty(); }

private:
    std::vector<NNPoly> gens_;
};

enum class IdealClass { prime, not_prime };

inline std::string to_string(IdealClass c) { return c == IdealClass::prime ? "prime" : "not_prime"; }

/// The finitely generated prime ideals are empty, or generated by prime integers and at most x.
inline IdealClass fg_prime_ideal_classify(const IdealGens& gens)
{
    std::size_t xs = 0;
    for (const auto& g : gens.generators()) {
        if (g == NNPoly::x())
            ++xs;
        else if (!(g.is_constant() && is_prime(g.leading())))
            return IdealClass::not_prime;
    }
    return xs <= 1 ? IdealClass::prime : IdealClass::not_prime;
}

inline bool ideal_member(const NNPoly& f, const IdealGens& gens)
{
    const auto& gs = gens.generators();
    return std::any_of(gs.begin(), gs.end(), [&](const NNPoly& g) { return divides_N(g, f); });
}

enum class PrimeIdealFamily { const_ne_1, lead_ne_1, const_div_p, lead_div_p, nonunit };

inline std::optional<PrimeIdealFamily> parse_family(const std::string& s)
{
    static const std::map<std::string, PrimeIdealFamily> names{{"const_ne_1", PrimeIdealFamily::const_ne_1},
                                                               {"lead_ne_1", PrimeIdealFamily::lead_ne_1},
                                                               {"const_div_p", PrimeIdealFamily::const_div_p},
                                                               {"lead_div_p", PrimeIdealFamily::lead_div_p},
                                                               {"nonunit", PrimeIdealFamily::nonunit}};
    auto it = names.find(s);
    return it == names.end() ? std::nullopt : std::optional(it->second);
}

/// Membership of f in P0 in one of the five listed prime ideals of P0.
inline bool prime_ideal_family_member(const NNPoly& f, PrimeIdealFamily family, const Int& p = 0)
{
    if (!in_p0(f))
        throw domain_error("prime_ideal_family_member: f is not in P0");
    const bool needs_p = family == PrimeIdealFamily::const_div_p || family == PrimeIdealFamily::lead_div_p;
    if (needs_p && !is_prime(p))
        throw domain_error("prime_ideal_family_member: p must be prime");
    switch (family) {
    case PrimeIdealFamily::const_ne_1: return f.constant_term() != 1;
    case PrimeIdealFamily::lead_ne_1: return f.leading() != 1;
    case PrimeIdealFamily::const_div_p: return f.constant_term() % p == 0;
    case PrimeIdealFamily::lead_div_p: return f.leading() % p == 0;
    case PrimeIdealFamily::nonunit: return !f.is_one();
    }
    return false;
}

/// v_{0,p} (exponents in f(0)), l_p (exponents in the leading coefficient), delta = deg.
struct Valuations {
    std::map<Int, unsigned> v0p;
    std::map<Int, unsigned> lp;
    std::size_t delta = 0;

    friend Valuations operator+(Valuations a, const Valuations& b)
    {
        for (const auto& [p, e] : b.v0p)
            a.v0p[p] += e;
        for (const auto& [p, e] : b.lp)
            a.lp[p] += e;
        a.delta += b.delta;
        return a;
    }

    friend bool operator==(const Valuations&, const Valuations&) = default;
};

inline Valuations valuations(const NNPoly& f)
{
    if (!in_p0(f))
        throw domain_error("valuations: f is not in P0");
    return {factor_int(f.constant_term()).prime_powers, factor_int(f.leading()).prime_powers, f.degree()};
}

/// Outcome of a bounded semi-decision.
struct SemiDecision {
    enum class Status { found, never, unknown };
    Status status = Status::unknown;
    std::size_t k = 0; ///< the witness exponent when found

    static SemiDecision found(std::size_t k) { return {Status::found, k}; }
    static SemiDecision never() { return {Status::never, 0}; }
    static SemiDecision unknown() { return {Status::unknown, 0}; }

    bool is_found() const { return status == Status::found; }
};

inline std::string to_string(SemiDecision::Status s)
{
    switch (s) {
    case SemiDecision::Status::found: return "found";
    case SemiDecision::Status::never: return "never";
    case SemiDecision::Status::unknown: return "unknown";
    }
    return "?";
}

/**
 * A cofactor c with deg c <= deg_bound and f c in N0[x]*, if one exists.
 * For each degree d the conditions on the d+1 coefficients of c are linear
 * (every coefficient of f c is >= 0, the leading one >= 1); rational
 * feasibility is decided exactly and the point is scaled to integers.
 */
inline std::optional<ZPoly> in_E(const ZPoly& f, std::size_t deg_bound)
{
    if (f.is_zero())
        throw domain_error("in_E: zero polynomial");
    const std::size_t n = f.degree();
    for (std::size_t d = 0; d <= deg_bound; ++d) {
        std::vector<LinearInequality> sys;
        for (std::size_t k = 0; k <= n + d; ++k) {
            LinearInequality row{std::vector<Int>(d + 1), 0};
            for (std::size_t i = 0; i <= d; ++i)
                if (k >= i && k - i <= n)
                    row.coeffs[i] = f[k - i];
            sys.push_back(std::move(row));
        }
        LinearInequality lead{std::vector<Int>(d + 1), 1};
        lead.coeffs[d] = f.leading();
        sys.push_back(std::move(lead));

        auto point = fourier_motzkin_solve(sys, d + 1);
        if (!point)
            continue;
        Int den = 1;
        for (const auto& v : *point) {
            const Int& q = boost::multiprecision::denominator(v);
            den = den / gcd(den, q) * q;
        }
        std::vector<Int> c;
        for (const auto& v : *point)
            c.push_back(boost::multiprecision::numerator(v) * (den / boost::multiprecision::denominator(v)));
        ZPoly cof(std::move(c));
        if (auto prod = f * cof; !prod.is_zero() && is_nonneg(prod))
            return cof;
        throw error("in_E: cofactor failed verification");
    }
    return std::nullopt;
}

/// lambda in B: lambda in N0[x]* and irreducible in Z[x].
inline bool b_set_member(const ZPoly& lambda, const KroneckerLimits& limits = {})
{
    if (lambda.is_zero() || !is_nonneg(lambda))
        return false;
    return is_irreducible_in_zx(lambda, limits);
}

namespace detail {

inline const std::array<Rational, 5>& sample_points()
{
    static const std::array<Rational, 5> pts{Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(3, 2)};
    return pts;
}

} // namespace detail

/**
 * Least k <= k_max with lambda^k f in N0[x]*. Reports never when a sample
 * t >= 0 has lambda(t) > 0 and f(t) < 0, or t > 0 has f(t) = 0: every
 * lambda^k f would then take a negative value or vanish at a positive point.
 */
inline SemiDecision A_lambda_member(const ZPoly& f, const ZPoly& lambda, std::size_t k_max,
                                    const KroneckerLimits& limits = {})
{
    if (f.is_zero())
        throw domain_error("A_lambda_member: zero polynomial");
    if (!b_set_member(lambda, limits))
        throw domain_error("A_lambda_member: lambda is not in N0[x]* or not irreducible in Z[x]");
    for (const Rational& t : detail::sample_points()) {
        const Rational ft = f.eval(t);
        if (ft < 0 && lambda.eval(t) > 0)
            return SemiDecision::never();
        if (ft == 0 && t > 0)
            return SemiDecision::never();
    }
    ZPoly acc = f;
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (is_nonneg(acc))
            return SemiDecision::found(k);
        acc *= lambda;
    }
    return SemiDecision::unknown();
}

/**
 * Least n <= n_max with (num/den)^n in N0[x]*. The quotient must lie in
 * Z[x], otherwise it is never in the root closure; a zero of the quotient
 * at a positive sample point is also a definite obstruction.
 */
inline SemiDecision root_closure_member(const ZPoly& num, const ZPoly& den, std::size_t n_max)
{
    if (den.is_zero())
        throw domain_error("root_closure_member: zero denominator");
    if (num.is_zero())
        throw domain_error("root_closure_member: zero numerator");
    auto q = divide_exact(num, den);
    if (!q)
        return SemiDecision::never();
    for (const Rational& t : detail::sample_points())
        if (t > 0 && q->eval(t) == 0)
            return SemiDecision::never();
    ZPoly acc = *q;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (is_nonneg(acc))
            return SemiDecision::found(n);
        acc *= *q;
    }
    return SemiDecision::unknown();
}

/// Membership in P_lambda = lambda Z[x] n N0[x]*, for lambda an atom of E.
inline bool P_lambda_member(const NNPoly& f, const ZPoly& lambda, std::size_t e_degree_bound = 6,
                            const KroneckerLimits& limits = {})
{
    if (!is_irreducible_in_zx(lambda, limits))
        throw domain_error("P_lambda_member: lambda is not irreducible in Z[x]");
    if (!in_E(lambda, e_degree_bound))
        throw domain_error("P_lambda_member: no multiple of lambda in N0[x]* within the degree bound");
    return divides_Z(lambda, f.z());
}

} // namespace nnpoly
