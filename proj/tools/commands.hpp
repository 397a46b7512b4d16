/**
 * @file commands.hpp
 * @brief Subcommands of the nnpoly tool. Every command produces a JSON value;
 *        text output is rendered from it.
 *
 * The dispatcher is shared by the binary and by `corpus run`, which replays
 * argument vectors from the data files and compares the result with the
 * expected JSON subset.
 */
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <nnpoly/nnpoly.hpp>

namespace nnpoly::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, failure = 1, parse_failure = 2, resource_failure = 3 };

struct CommandResult {
    json value;
    std::string headline; ///< first line of text output, may be empty
    int exit_code = ExitCode::ok;
};

// ---------------------------------------------------------------------------
// JSON helpers

inline json str(const Int& v) { return v.str(); }

inline json rational_json(const Rational& q)
{
    return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

inline json poly_list(const std::vector<NNPoly>& ps)
{
    json a = json::array();
    for (const auto& p : ps)
        a.push_back(to_string(p));
    return a;
}

inline json int_map(const std::map<Int, unsigned>& m)
{
    json o = json::object();
    for (const auto& [p, e] : m)
        o[p.str()] = e;
    return o;
}

inline json semi_json(const SemiDecision& d, const char* exponent_name, std::size_t bound)
{
    json j{{"status", to_string(d.status)}, {"bound", bound}};
    j[exponent_name] = d.is_found() ? json(d.k) : json(nullptr);
    return j;
}

/// True when every key of expected appears in actual with a matching value.
inline bool json_subset(const json& expected, const json& actual)
{
    if (expected.is_object()) {
        if (!actual.is_object())
            return false;
        for (const auto& [k, v] : expected.items())
            if (!actual.contains(k) || !json_subset(v, actual.at(k)))
                return false;
        return true;
    }
    return expected == actual;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline bool is_rational(const json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

inline std::string scalar_text(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (is_rational(j))
        return j["den"] == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + j["den"].get<std::string>();
    return j.dump();
}

inline bool flat(const json& j)
{
    if (j.is_array())
        return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive() || is_rational(e); });
    return j.is_primitive() || is_rational(j);
}

inline void render(const json& j, std::ostream& out, const std::string& indent)
{
    for (const auto& [k, v] : j.items()) {
        if (flat(v)) {
            out << indent << k << ": ";
            if (v.is_array()) {
                out << "[";
                for (std::size_t i = 0; i < v.size(); ++i)
                    out << (i ? ", " : "") << scalar_text(v[i]);
                out << "]";
            } else {
                out << scalar_text(v);
            }
            out << "\n";
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return flat(e); })) {
            out << indent << k << ":\n";
            for (const auto& e : v) {
                out << indent << "  ";
                if (e.is_array())
                    for (std::size_t i = 0; i < e.size(); ++i)
                        out << (i ? " * " : "") << scalar_text(e[i]);
                else
                    out << scalar_text(e);
                out << "\n";
            }
        } else {
            out << indent << k << ":\n";
            render(v, out, indent + "  ");
        }
    }
}

} // namespace detail

inline std::string render_text(const CommandResult& r)
{
    std::ostringstream out;
    if (!r.headline.empty())
        out << r.headline << "\n";
    if (r.value.is_object() || r.value.is_array())
        detail::render(r.value, out, "");
    else
        out << detail::scalar_text(r.value) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Commands

class Commands {
public:
    explicit Commands(Config cfg) : cfg_(std::move(cfg)), engine_(cfg_.factorization_cache_size)
    {
        cfg_.validate();
        limits_.max_degree = cfg_.kronecker_deg_cap;
    }

    const Config& config() const noexcept { return cfg_; }

    json factor(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        const auto zs = engine_.atom_factorizations(f);
        json list = json::array();
        for (const auto& z : zs)
            list.push_back(poly_list(z.atoms));
        const LengthSet ls = lengths(zs);
        json ds = json::array();
        for (auto d : delta_set(ls))
            ds.push_back(d);
        return {{"poly", to_string(f)},
                {"factorizations", list},
                {"count", zs.size()},
                {"lengths", std::vector<std::size_t>(ls.begin(), ls.end())},
                {"elasticity", rational_json(elasticity(ls))},
                {"delta_set", ds},
                {"catenary_degree", catenary_degree(zs, cfg_.catenary_cap)}};
    }

    json atom(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        json j{{"poly", to_string(f)}};
        if (f.is_one()) {
            j["atom"] = false;
            j["witness"] = {{"reason", "unit"}};
            return j;
        }
        const bool a = is_atom(f);
        j["atom"] = a;
        if (!a) {
            j["witness"] = split_witness(f);
        } else if (in_p0(f) && f.degree() >= 1) {
            const BaseATrace t = trace_divisor_pairs(f);
            j["witness"] = {{"a", str(t.a)}, {"b", str(t.b)}, {"candidates", t.candidates.size()}, {"accepted", 0}};
        } else {
            j["witness"] = {{"reason", f == NNPoly::x() ? "x" : "prime integer"}};
        }
        return j;
    }

    json prime(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        json j{{"poly", to_string(f)}};
        if (f.is_one()) {
            j["prime"] = false;
            j["witness"] = {{"reason", "unit"}};
            return j;
        }
        const bool p = is_prime_element(f);
        j["prime"] = p;
        if (p) {
            j["witness"] = {{"reason", f == NNPoly::x() ? "x" : "prime integer"}};
        } else if (!is_atom(f)) {
            j["witness"] = {{"reason", "not an atom"}, {"split", split_witness(f)}};
        } else {
            const NonPrimalityWitness w = non_primality_witness(f);
            j["witness"] = {{"reason", "f divides g*h but neither g nor h"},
                            {"g", to_string(w.g)},
                            {"h", to_string(w.h)},
                            {"z", to_string(w.z)},
                            {"eisenstein_p", str(w.eisenstein_p)},
                            {"verified", w.check().all()}};
        }
        return j;
    }

    json encode(const std::string& text, const std::string& base, const std::string& mode)
    {
        const NNPoly f = parse_nnpoly(text);
        if (!base.empty()) {
            const Int a = parse_int(base);
            return {{"poly", to_string(f)}, {"mode", "base"}, {"a", str(a)}, {"b", str(encode_base(f, a))}};
        }
        EmbedMode m = EmbedMode::alpha;
        if (mode == "eval")
            m = EmbedMode::eval;
        else if (mode == "eval_N")
            m = EmbedMode::eval_N;
        else if (mode != "alpha")
            throw parse_error("encode: mode must be alpha, eval or eval_N");
        const BaseAPair p = embed_pair(f, m);
        return {{"poly", to_string(f)}, {"mode", to_string(m)}, {"a", str(p.a)}, {"b", str(p.b)}};
    }

    json decode(const std::string& a, const std::string& b)
    {
        const NNPoly f = decode_base(parse_int(a), parse_int(b));
        return {{"a", a}, {"b", b}, {"poly", to_string(f)}};
    }

    json eta_cmd(const std::string& a, const std::string& b)
    {
        return {{"a", a}, {"b", b}, {"eta", eta(parse_int(a), parse_int(b))}};
    }

    json divisors(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        const auto ds = nn_divisors(f);
        json j{{"poly", to_string(f)}, {"divisors", poly_list(ds)}, {"count", ds.size()}};
        if (in_p0(f) && f.degree() >= 1) {
            const BaseATrace t = trace_divisor_pairs(f);
            json pairs = json::array();
            for (const auto& p : t.pairs)
                pairs.push_back({to_string(p.g), to_string(p.h)});
            json cands = json::array();
            for (const auto& c : t.candidates) {
                json e{{"d", str(c.d)}, {"e", str(c.e)}, {"eta_ok", c.eta_ok}, {"accepted", c.accepted}};
                if (c.eta_ok)
                    e["product"] = to_string(*c.product);
                cands.push_back(e);
            }
            j["base_a"] = {{"a", str(t.a)}, {"b", str(t.b)}, {"candidates", cands}};
            j["divisor_pairs"] = pairs;
        }
        return j;
    }

    json chains_cmd(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        const ChainBijectionReport r = verify_chain_bijection(f);
        return {{"poly", to_string(f)},
                {"ordered_factorizations", r.tuples},
                {"chains", r.chains},
                {"bijection", {{"injective", r.injective}, {"onto", r.onto}, {"inverse_ok", r.inverse_ok}, {"ok", r.ok()}}}};
    }

    json lemma3(const std::vector<std::string>& texts)
    {
        std::vector<NNPoly> atoms;
        for (const auto& t : texts)
            atoms.push_back(parse_nnpoly(t));
        const Lemma3Witness w = lemma3_z(atoms);
        std::size_t n = 0;
        for (const auto& f : atoms)
            n = std::max(n, f.degree());
        return {{"atoms", poly_list(atoms)},
                {"z", to_string(w.z)},
                {"p", str(w.p)},
                {"q", str(w.q)},
                {"products", poly_list(w.products)},
                {"checks",
                 {{"z_outside", !is_nonneg(w.z)}, {"degree", w.z.degree() == 2 * n}, {"eisenstein", eisenstein_prime(w.z).has_value()}}}};
    }

    json psi(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        const QuotientCoords c = psi_coords(f, limits_);
        json primes = json::object();
        for (const auto& [p, e] : c.prime_exponents)
            primes[p.str()] = e;
        json irr = json::array();
        for (const auto& [q, e] : c.irreducible_exponents)
            irr.push_back({{"poly", to_string(q)}, {"exponent", e}});
        return {{"poly", to_string(f)}, {"primes", primes}, {"irreducibles", irr}};
    }

    json vlambda(const std::string& text, const std::string& lambda)
    {
        const NNPoly f = parse_nnpoly(text);
        const ZPoly l = parse_zpoly(lambda);
        return {{"poly", to_string(f)}, {"lambda", to_string(l)}, {"v", v_lambda(f, l, limits_)}};
    }

    json valuations_cmd(const std::string& text)
    {
        const NNPoly f = parse_nnpoly(text);
        const Valuations v = valuations(f);
        return {{"poly", to_string(f)}, {"v0p", int_map(v.v0p)}, {"lp", int_map(v.lp)}, {"delta", v.delta}};
    }

    json in_e(const std::string& text)
    {
        const ZPoly f = parse_zpoly(text);
        const auto c = in_E(f, cfg_.e_degree_bound);
        json j{{"poly", to_string(f)}, {"status", c ? "found" : "unknown"}, {"bound", cfg_.e_degree_bound}};
        j["cofactor"] = c ? json(to_string(*c)) : json(nullptr);
        if (c)
            j["product"] = to_string(f * *c);
        return j;
    }

    json a_lambda(const std::string& text, const std::string& lambda)
    {
        const ZPoly f = parse_zpoly(text);
        const ZPoly l = parse_zpoly(lambda);
        json j{{"poly", to_string(f)}, {"lambda", to_string(l)}};
        j.update(semi_json(A_lambda_member(f, l, cfg_.a_lambda_k_max, limits_), "k", cfg_.a_lambda_k_max));
        return j;
    }

    json root_closure(const std::string& num, const std::string& den)
    {
        const ZPoly p = parse_zpoly(num);
        const ZPoly q = parse_zpoly(den);
        json j{{"num", to_string(p)}, {"den", to_string(q)}};
        j.update(semi_json(root_closure_member(p, q, cfg_.root_closure_n_max), "n", cfg_.root_closure_n_max));
        return j;
    }

    json weyl_apply_cmd(const std::string& op, const std::string& poly)
    {
        const WeylOp u = parse_weyl(op);
        const ZPoly f = parse_zpoly(poly);
        return {{"op", to_string(u)}, {"poly", to_string(f)}, {"result", to_string(weyl_apply(u, f))}};
    }

    json weyl_mul_cmd(const std::string& a, const std::string& b)
    {
        const WeylOp u = parse_weyl(a);
        const WeylOp v = parse_weyl(b);
        return {{"left", to_string(u)}, {"right", to_string(v)}, {"result", to_string(weyl_mul(u, v))}};
    }

    json prop_m(const std::string& text)
    {
        const ZPoly f = parse_zpoly(text);
        json j = delta_map_cmd(text);
        j["member"] = prop_m_membership(f);
        j["is_nonneg"] = is_nonneg(f);
        return j;
    }

    json delta_map_cmd(const std::string& text)
    {
        const ZPoly f = parse_zpoly(text);
        json d = json::array();
        for (const auto& v : delta_map(f))
            d.push_back(v.str());
        return {{"poly", to_string(f)}, {"delta_map", d}};
    }

    json ideal_classify(const std::vector<std::string>& texts)
    {
        const IdealGens g = gens_of(texts);
        return {{"generators", poly_list(g.generators())}, {"class", to_string(fg_prime_ideal_classify(g))}};
    }

    json ideal_member_cmd(const std::string& text, const std::vector<std::string>& texts)
    {
        const NNPoly f = parse_nnpoly(text);
        const IdealGens g = gens_of(texts);
        return {{"poly", to_string(f)}, {"generators", poly_list(g.generators())}, {"member", ideal_member(f, g)}};
    }

    json ideal_family(const std::string& text, const std::string& family, const std::string& p)
    {
        const NNPoly f = parse_nnpoly(text);
        const auto fam = parse_family(family);
        if (!fam)
            throw parse_error("unknown family '" + family + "'");
        json j{{"poly", to_string(f)}, {"family", family}};
        const Int prime = p.empty() ? Int(0) : parse_int(p);
        if (!p.empty())
            j["p"] = p;
        j["member"] = prime_ideal_family_member(f, *fam, prime);
        return j;
    }

    json ks_demo()
    {
        const KsReport r = ks_counterexample_report();
        json factors = json::array();
        for (std::size_t i = 0; i < r.factor_polys.size(); ++i)
            factors.push_back({{"poly", to_string(r.factor_polys[i])},
                               {"size", r.factor_sizes[i]},
                               {"components", r.factor_components[i]},
                               {"value_at_2", str(r.factor_values_at_2[i])}});
        json pairs = json::array();
        for (const auto& [i, k, iso] : r.factor_pairs)
            pairs.push_back({{"i", i}, {"j", k}, {"isomorphic", iso}});
        return {{"factors", factors},
                {"left", to_string(r.factor_polys[0]) + " * " + to_string(r.factor_polys[1])},
                {"right", to_string(r.factor_polys[2]) + " * " + to_string(r.factor_polys[3])},
                {"left_size", r.left_size},
                {"right_size", r.right_size},
                {"products_isomorphic", r.products_isomorphic},
                {"polynomial_identity", r.polynomial_identity},
                {"sizes_match_evaluation", r.sizes_match_evaluation},
                {"factor_pairs", pairs},
                {"factors_pairwise_distinct", r.factor_pairs_all_distinct()}};
    }

    json poset_iso(const std::string& a, const std::string& b)
    {
        const FinPoset p = load_poset(a), q = load_poset(b);
        return {{"sizes", {p.size(), q.size()}}, {"isomorphic", is_isomorphic(p, q, cfg_.poset_size_cap)}};
    }

    json poset_aut(const std::string& a)
    {
        const FinPoset p = load_poset(a);
        return {{"size", p.size()}, {"automorphisms", aut_count(p, cfg_.poset_size_cap)}};
    }

private:
    /// A non-atom f as (first atom) * (rest) from its first factorization.
    json split_witness(const NNPoly& f)
    {
        const auto zs = engine_.atom_factorizations(f);
        const auto& atoms = zs.front().atoms;
        const NNPoly rest = product(std::vector<NNPoly>(atoms.begin() + 1, atoms.end()));
        return json::array({to_string(atoms.front()), to_string(rest)});
    }

    static IdealGens gens_of(const std::vector<std::string>& texts)
    {
        std::vector<NNPoly> gs;
        for (const auto& t : texts)
            gs.push_back(parse_nnpoly(t));
        return IdealGens(std::move(gs));
    }

    static FinPoset load_poset(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw parse_error("cannot open poset file " + path);
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw parse_error(path + ": " + e.what());
        }
        return poset_from_json(j);
    }

    Config cfg_;
    FactorizationEngine engine_;
    KroneckerLimits limits_;
};

// ---------------------------------------------------------------------------
// Dispatch

class Dispatcher;
CommandResult run_corpus(Dispatcher& d, const std::string& dir);

/**
 * Parses an argument vector (without the program name and global flags) and
 * runs the selected command. Library exceptions are mapped to exit codes:
 * parse_error -> 2, resource_error -> 3, anything else -> 1.
 */
class Dispatcher {
public:
    explicit Dispatcher(Config cfg) : cmd_(std::move(cfg)) {}

    const Config& config() const noexcept { return cmd_.config(); }

    CommandResult run(const std::vector<std::string>& args)
    {
        CommandResult r;
        try {
            r = dispatch(args);
        } catch (const CLI::ParseError& e) {
            r = failure(ExitCode::parse_failure, "usage", e.what());
        } catch (const parse_error& e) {
            r = failure(ExitCode::parse_failure, "parse_error", e.what());
        } catch (const resource_error& e) {
            r = failure(ExitCode::resource_failure, "resource_error", e.what());
        } catch (const domain_error& e) {
            r = failure(ExitCode::failure, "domain_error", e.what());
        } catch (const std::exception& e) {
            r = failure(ExitCode::failure, "error", e.what());
        }
        return r;
    }

    Commands& commands() { return cmd_; }

private:
    static CommandResult failure(int code, const char* kind, const std::string& msg)
    {
        return {json{{"error", {{"kind", kind}, {"message", msg}}}}, "", code};
    }

    CommandResult dispatch(const std::vector<std::string>& args)
    {
        CLI::App app{"nnpoly"};
        app.require_subcommand(1);
        std::vector<std::string> s;
        std::string p1, p2, base, mode = "alpha", dir = NNPOLY_CORPUS_DIR;
        std::function<CommandResult()> action;
        auto set = [&](std::function<json()> fn, std::function<std::string(const json&)> head = {}) {
            action = [fn, head] {
                CommandResult r{fn(), ""};
                if (head)
                    r.headline = head(r.value);
                return r;
            };
        };
        auto poly1 = [&](const char* name, const char* help, std::function<json(const std::string&)> fn) {
            auto* sc = app.add_subcommand(name, help);
            sc->add_option("poly", p1)->required();
            sc->callback([&, fn] { set([&, fn] { return fn(p1); }); });
            return sc;
        };

        poly1("factor", "all atom factorizations and their invariants", [&](const std::string& a) { return cmd_.factor(a); });
        poly1("atom", "is the polynomial an atom", [&](const std::string& a) { return cmd_.atom(a); });
        poly1("prime", "is the polynomial a prime element", [&](const std::string& a) { return cmd_.prime(a); });
        {
            auto* sc = poly1("encode", "base-a encoding", [&](const std::string& a) { return cmd_.encode(a, base, mode); });
            auto* b = sc->add_option("--base", base, "explicit base a");
            sc->add_option("--mode", mode, "alpha, eval or eval_N")->excludes(b);
        }
        {
            auto* sc = app.add_subcommand("decode", "polynomial with base-a digits of b");
            sc->add_option("a", p1)->required();
            sc->add_option("b", p2)->required();
            sc->callback([&] { set([&] { return cmd_.decode(p1, p2); }, [](const json& j) { return j["poly"].get<std::string>(); }); });
        }
        {
            auto* sc = app.add_subcommand("eta", "max n with a^n < b");
            sc->add_option("a", p1)->required();
            sc->add_option("b", p2)->required();
            sc->callback([&] { set([&] { return cmd_.eta_cmd(p1, p2); }); });
        }
        poly1("divisors", "divisors in N0[x]* and the base-a trace", [&](const std::string& a) { return cmd_.divisors(a); });
        poly1("chains", "chains of principal ideals versus ordered factorizations",
              [&](const std::string& a) { return cmd_.chains_cmd(a); });
        {
            auto* sc = app.add_subcommand("lemma3", "Eisenstein multiplier for a list of atoms");
            sc->add_option("polys", s)->required();
            sc->callback([&] { set([&] { return cmd_.lemma3(s); }); });
        }
        poly1("psi", "coordinates in the quotient group", [&](const std::string& a) { return cmd_.psi(a); });
        {
            auto* sc = app.add_subcommand("vlambda", "multiplicity of an irreducible factor");
            sc->add_option("poly", p1)->required();
            sc->add_option("lambda", p2)->required();
            sc->callback([&] { set([&] { return cmd_.vlambda(p1, p2); }); });
        }
        poly1("valuations", "v_{0,p}, l_p and degree", [&](const std::string& a) { return cmd_.valuations_cmd(a); });
        poly1("in-e", "bounded search for a cofactor into N0[x]*", [&](const std::string& a) { return cmd_.in_e(a); });
        {
            auto* sc = app.add_subcommand("a-lambda", "least k with lambda^k f non-negative");
            sc->add_option("zpoly", p1)->required();
            sc->add_option("lambda", p2)->required();
            sc->callback([&] { set([&] { return cmd_.a_lambda(p1, p2); }); });
        }
        {
            auto* sc = app.add_subcommand("root-closure", "least n with (num/den)^n non-negative");
            sc->add_option("num", p1)->required();
            sc->add_option("den", p2)->required();
            sc->callback([&] { set([&] { return cmd_.root_closure(p1, p2); }); });
        }
        {
            auto* w = app.add_subcommand("weyl", "Weyl algebra operations");
            w->require_subcommand(1);
            auto* ap = w->add_subcommand("apply", "apply an operator to a polynomial");
            ap->add_option("op", p1)->required();
            ap->add_option("poly", p2)->required();
            ap->callback([&] { set([&] { return cmd_.weyl_apply_cmd(p1, p2); }, [](const json& j) { return j["result"].get<std::string>(); }); });
            auto* mu = w->add_subcommand("mul", "normal form of a product");
            mu->add_option("left", p1)->required();
            mu->add_option("right", p2)->required();
            mu->callback([&] { set([&] { return cmd_.weyl_mul_cmd(p1, p2); }, [](const json& j) { return j["result"].get<std::string>(); }); });
        }
        poly1("prop-m", "derivative criterion for non-negative coefficients", [&](const std::string& a) { return cmd_.prop_m(a); });
        poly1("delta-map", "v0 of the derivatives", [&](const std::string& a) { return cmd_.delta_map_cmd(a); });
        {
            auto* id = app.add_subcommand("ideal", "finitely generated ideals");
            id->require_subcommand(1);
            auto* cl = id->add_subcommand("classify", "prime or not");
            cl->add_option("gens", s)->required();
            cl->callback([&] { set([&] { return cmd_.ideal_classify(s); }); });
            auto* me = id->add_subcommand("member", "membership test");
            me->add_option("poly", p1)->required();
            me->add_option("gens", s)->required();
            me->callback([&] { set([&] { return cmd_.ideal_member_cmd(p1, s); }); });
            auto* fa = id->add_subcommand("family", "membership in a prime ideal of P0");
            fa->add_option("poly", p1)->required();
            fa->add_option("family", p2, "const_ne_1, lead_ne_1, const_div_p, lead_div_p or nonunit")->required();
            fa->add_option("--p", base, "the prime for const_div_p and lead_div_p");
            fa->callback([&] { set([&] { return cmd_.ideal_family(p1, p2, base); }); });
        }
        {
            auto* ps = app.add_subcommand("poset", "finite posets");
            ps->require_subcommand(1);
            ps->add_subcommand("ks-demo", "the two factorizations of a 63-element poset")->callback([&] {
                set([&] { return cmd_.ks_demo(); });
            });
            auto* iso = ps->add_subcommand("iso", "isomorphism of two posets given as JSON files");
            iso->add_option("a", p1)->required();
            iso->add_option("b", p2)->required();
            iso->callback([&] { set([&] { return cmd_.poset_iso(p1, p2); }); });
            auto* aut = ps->add_subcommand("aut", "number of automorphisms");
            aut->add_option("file", p1)->required();
            aut->callback([&] { set([&] { return cmd_.poset_aut(p1); }); });
        }
        {
            auto* co = app.add_subcommand("corpus", "golden vectors");
            co->require_subcommand(1);
            auto* run = co->add_subcommand("run", "run every data file and report");
            run->add_option("--dir", dir, "corpus directory");
            run->callback([&] { action = [&] { return run_corpus(*this, dir); }; });
        }

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (!action)
            throw CLI::CallForHelp();
        return action();
    }

    Commands cmd_;
};

/**
 * Corpus files are JSON objects {"name", "cases": [{"args": [...],
 * "expect": {...}, "exit": n}]}; "expect" is matched as a subset of the
 * command's output and "exit" defaults to 0. Files run in name order.
 * The token {data} in an argument expands to the parent of the corpus
 * directory.
 */
inline CommandResult run_corpus(Dispatcher& d, const std::string& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw parse_error("corpus: no such directory " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    const std::string data_dir = fs::absolute(dir).lexically_normal().parent_path().string();

    json report = json::array();
    std::size_t passed = 0, failed = 0;
    for (const auto& path : files) {
        std::ifstream in(path);
        json doc;
        try {
            in >> doc;
        } catch (const json::parse_error& e) {
            throw parse_error("corpus: " + path.filename().string() + ": " + e.what());
        }
        const std::string name = doc.value("name", path.stem().string());
        std::size_t index = 0;
        for (const auto& c : doc.at("cases")) {
            const auto written = c.at("args").get<std::vector<std::string>>();
            auto args = written;
            for (auto& a : args)
                if (auto pos = a.find("{data}"); pos != std::string::npos)
                    a.replace(pos, 6, data_dir);
            const int want_exit = c.value("exit", 0);
            const CommandResult r = d.run(args);
            const bool ok = r.exit_code == want_exit && (!c.contains("expect") || json_subset(c["expect"], r.value));
            (ok ? passed : failed)++;
            json entry{{"file", path.filename().string()}, {"name", name}, {"case", index++}, {"args", written}, {"pass", ok}};
            if (!ok)
                entry["actual"] = r.value;
            report.push_back(entry);
        }
    }
    CommandResult out;
    out.value = {{"passed", passed}, {"failed", failed}, {"cases", report}};
    out.headline = failed == 0 ? "corpus: all " + std::to_string(passed) + " cases pass"
                               : "corpus: " + std::to_string(failed) + " of " + std::to_string(passed + failed) + " cases FAIL";
    out.exit_code = failed == 0 ? ExitCode::ok : ExitCode::failure;
    return out;
}

} // namespace nnpoly::cli
