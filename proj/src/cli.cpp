#include "siegel/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "siegel/eisenstein.hpp"
#include "siegel/lseries.hpp"

namespace siegel {

using nlohmann::json;

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

Int int_from(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    return Int(j.get<std::string>());
}

long long_from(const json& j) {
    if (j.is_number_integer()) return j.get<long>();
    return std::stol(j.get<std::string>());
}

}  // namespace

json to_json(const HalfIntMatrix& beta) {
    json rows = json::array();
    for (long i = 0; i < beta.n; ++i) {
        json row = json::array();
        for (long j = 0; j < beta.n; ++j) row.push_back(int_str(beta.twice_scaled(i, j)));
        rows.push_back(row);
    }
    return json{{"n", beta.n}, {"N", beta.N}, {"twice_scaled", rows}};
}

HalfIntMatrix halfint_from_json(const json& j) {
    long n = long_from(j.at("n")), N = long_from(j.at("N"));
    ZMat m(n, n);
    const json& rows = j.at("twice_scaled");
    for (long i = 0; i < n; ++i)
        for (long c = 0; c < n; ++c) m(i, c) = int_from(rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(c)));
    return HalfIntMatrix(n, N, std::move(m));
}

json to_json(const PartitionParabolic& P) {
    return json{{"n", P.n}, {"parts", P.parts}};
}

PartitionParabolic parabolic_from_json(const json& j) {
    return PartitionParabolic(long_from(j.at("n")), j.at("parts").get<std::vector<long>>());
}

json to_json(const QExpansion& f) {
    json coeffs = json::array();
    for (const auto& [beta, v] : f.coefficients())
        coeffs.push_back(json{{"beta", to_json(beta)}, {"value", std::to_string(v)}});
    return json{{"parabolic", to_json(f.parabolic())}, {"N", f.N()},     {"p", f.p()},
                {"m", f.m()},                          {"trace_bound", f.trace_bound()},
                {"coeffs", coeffs}};
}

QExpansion qexp_from_json(const json& j) {
    QExpansion f(parabolic_from_json(j.at("parabolic")), long_from(j.at("N")), long_from(j.at("p")),
                 long_from(j.at("m")), long_from(j.at("trace_bound")));
    for (const auto& c : j.at("coeffs"))
        f.set_coefficient(halfint_from_json(c.at("beta")), std::stoull(c.at("value").get<std::string>()));
    return f;
}

json to_json(const DirichletCharacter& chi) {
    json vals = json::array();
    for (long a = 0; a < chi.modulus(); ++a) {
        auto e = chi.exponent(Int(a));
        if (e)
            vals.push_back(*e);
        else
            vals.push_back(nullptr);
    }
    return json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"values", vals}};
}

DirichletCharacter character_from_json(const json& j) {
    long f = long_from(j.at("modulus")), o = long_from(j.at("order"));
    std::vector<long> exps;
    for (const auto& v : j.at("values")) exps.push_back(v.is_null() ? -1 : v.get<long>());
    return DirichletCharacter(f, o, std::move(exps));
}

json to_json(const Cyc& v) {
    json coeffs = json::array();
    for (const Rat& q : v.coeffs()) coeffs.push_back(rat_to_string(q));
    return json{{"order", v.order()}, {"coeffs", coeffs}};
}

Cyc cyc_from_json(const json& j) {
    long order = long_from(j.at("order"));
    Cyc out = Cyc::zero();
    long idx = 0;
    for (const auto& c : j.at("coeffs")) {
        Rat q = rat_from_string(c.get<std::string>());
        if (q != 0) out += Cyc(q) * Cyc::root_of_unity(order, idx);
        ++idx;
    }
    return out.promoted(order);
}

json to_json(const SatakeData& d, const TameCharacter& phi) {
    json alphas = json::array();
    for (size_t i = 0; i < d.alphas.size(); ++i)
        alphas.push_back(json{{"value", to_json(d.alphas[i])}, {"valuation", rat_to_string(d.valuations[i])}});
    json eps = json::array();
    for (const auto& e : d.weight.eps) eps.push_back(to_json(e));
    return json{{"parabolic", to_json(d.weight.parabolic)},
                {"t", d.weight.t},
                {"eps", eps},
                {"p", d.p},
                {"alphas", alphas},
                {"phi", json{{"character", to_json(phi.chi)}, {"phi_p_at_p", to_json(phi.value_at_p)}}}};
}

std::pair<SatakeData, TameCharacter> satake_from_json(const json& j) {
    PartitionParabolic P = parabolic_from_json(j.at("parabolic"));
    std::vector<long> t = j.at("t").get<std::vector<long>>();
    std::vector<DirichletCharacter> eps;
    for (const auto& e : j.at("eps")) eps.push_back(character_from_json(e));
    ArithmeticWeight w(P, t, eps);
    std::vector<Cyc> alphas;
    std::vector<Rat> vals;
    for (const auto& a : j.at("alphas")) {
        alphas.push_back(cyc_from_json(a.at("value")));
        vals.push_back(rat_from_string(a.at("valuation").get<std::string>()));
    }
    SatakeData data(w, long_from(j.at("p")), std::move(alphas), std::move(vals));
    TameCharacter phi{character_from_json(j.at("phi").at("character")),
                      cyc_from_json(j.at("phi").at("phi_p_at_p"))};
    return {data, phi};
}

json to_json(const PadicNumber& x) {
    if (x.is_exact_zero()) return json{{"zero", true}};
    if (x.kind() == PadicNumber::Kind::PrecZero)
        return json{{"zero_to_precision", rat_to_string(x.abs_precision())}};
    return json{{"v", rat_to_string(x.valuation())}, {"u", x.unit().get_str()}, {"rel", x.rel_precision()}};
}

PadicNumber padic_from_json(long p, long prec, const json& j) {
    if (j.contains("zero")) return PadicNumber::exact_zero(p);
    if (j.contains("zero_to_precision"))
        return PadicNumber::prec_zero(p, rat_from_string(j.at("zero_to_precision").get<std::string>()));
    long rel = j.contains("rel") ? long_from(j.at("rel")) : prec;
    return PadicNumber::from_unit(p, rat_from_string(j.at("v").get<std::string>()),
                                  Int(j.at("u").get<std::string>()), rel);
}

json to_json(const PadicSeries& f) {
    json coeffs = json::array();
    for (const auto& [e, c] : f.terms()) coeffs.push_back(json{{"exp", e}, {"val", to_json(c)}});
    return json{{"p", f.p()}, {"M", f.prec()}, {"vars", f.vars()}, {"D", f.degree_bound()}, {"coeffs", coeffs}};
}

PadicSeries series_from_json(const json& j) {
    long p = long_from(j.at("p")), M = long_from(j.at("M")), D = long_from(j.at("D"));
    PadicSeries f(p, M, j.at("vars").get<std::vector<std::string>>(), D);
    for (const auto& c : j.at("coeffs"))
        f.set_coefficient(c.at("exp").get<std::vector<long>>(), padic_from_json(p, M, c.at("val")));
    return f;
}

namespace {

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool has(const std::string& k) const { return flags.count(k) > 0; }
    std::string get(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) throw std::domain_error("missing required flag --" + k);
        return it->second;
    }
    std::string get_or(const std::string& k, const std::string& dft) const {
        auto it = flags.find(k);
        return it == flags.end() ? dft : it->second;
    }
};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    for (size_t i = 0; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.rfind("--", 0) == 0) {
            std::string key = s.substr(2);
            if (key == "json" || key == "no-time") {
                a.flags[key] = "1";
            } else {
                if (i + 1 >= argv.size()) throw std::domain_error("flag --" + key + " needs a value");
                a.flags[key] = argv[++i];
            }
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open file " + path);
    json j;
    in >> j;
    return j;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Report {
    json outputs = json::object();
    json checks = json::array();
    json inputs = json::object();

    void check(const std::string& name, const std::string& expected, const std::string& actual) {
        checks.push_back(json{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.at("pass").get<bool>()) return false;
        return true;
    }
};

EisensteinSpec eis_spec_from_json(const json& j) {
    EisensteinSpec spec{long_from(j.at("n")),
                        long_from(j.at("N")),
                        long_from(j.at("p")),
                        character_from_json(j.at("phi")),
                        [&] {
                            PartitionParabolic P = parabolic_from_json(j.at("parabolic"));
                            std::vector<long> t = j.at("t").get<std::vector<long>>();
                            std::vector<DirichletCharacter> eps;
                            for (const auto& e : j.at("eps")) eps.push_back(character_from_json(e));
                            return ArithmeticWeight(P, t, eps);
                        }(),
                        j.at("mode").get<std::string>() == "full" ? EisMode::Full : EisMode::Improved};
    if (spec.mode == EisMode::Full) {
        spec.k = long_from(j.at("k"));
        spec.chi = j.contains("chi") ? character_from_json(j.at("chi")) : DirichletCharacter::trivial(1);
    }
    spec.validate();
    return spec;
}

json arch_to_json(const ArchNormalization& a) {
    return json{{"sign", a.sign}, {"pow2", a.pow2}, {"powpi", rat_to_string(a.powpi)},
                {"gamma_rational", rat_to_string(a.gamma_rational)}};
}

int run(const Args& args, Report& rep) {
    if (args.positional.size() < 2) throw std::domain_error("expected <group> <verb>");
    const std::string& group = args.positional[0];
    const std::string& verb = args.positional[1];

    if (group == "cosets" && verb == "verify") {
        PartitionParabolic P(std::stol(args.get("n")), parse_long_list(args.get("parts")));
        CosetSpec spec{P, std::stol(args.get("r")), std::stol(args.get("p")), std::stol(args.get("l"))};
        if (args.has("budget")) spec.budget = std::stoull(args.get("budget"));
        rep.inputs = json{{"n", P.n}, {"parts", P.parts}, {"r", spec.r}, {"p", spec.p}, {"l", spec.l}};
        IndexReport r = verify_index_formula(spec);
        rep.outputs = json{{"total_cosets", r.total_cosets}, {"flat_count", r.flat_count},
                           {"predicted_flat", r.predicted_flat}, {"match", r.match},
                           {"group_size", r.group_size}};
        rep.check("flat-coset-index-formula", std::to_string(r.predicted_flat), std::to_string(r.flat_count));
        return 0;
    }

    if (group == "qexp") {
        json fj = read_json_file(args.get("in"));
        rep.inputs = fj;
        QExpansion f = qexp_from_json(fj);
        if (verb == "up") {
            long i = std::stol(args.get_or("i", "0"));
            QExpansion g = (i == 0) ? up_composite(f) : up_Ni(f, i);
            rep.outputs = json{{"result", to_json(g)}, {"constant_term_only", g.constant_term_only()}};
            return 0;
        }
        if (verb == "check-stratum") {
            long r = std::stol(args.get("r"));
            bool v = vanishes_rank_le(f, f.n() - r - 1);
            bool fl = is_flat(f, r);
            rep.outputs = json{{"vanishes_rank_le", v}, {"is_flat", fl}};
            return 0;
        }
        if (verb == "project") {
            long steps = std::stol(args.get_or("max-steps", "6"));
            try {
                ProjectResult pr = ordinary_project(f, steps);
                rep.outputs = json{{"projection", to_json(pr.value)}, {"steps_used", pr.steps_used}};
                rep.check("projector-stabilized", "true", "true");
            } catch (const NotStabilized& e) {
                rep.outputs = json{{"error", e.what()}};
                rep.check("projector-stabilized", "true", "false");
            }
            return 0;
        }
    }

    if (group == "euler") {
        json sj = read_json_file(args.get("in"));
        rep.inputs = sj;
        auto [data, phi] = satake_from_json(sj);
        if (verb == "ep" || verb == "imp") {
            long n = data.n();
            long s = args.has("s") ? std::stol(args.get("s")) : n + 1 - data.weight.t.back();
            if (verb == "ep") {
                DirichletCharacter chi = args.has("chi-file")
                                             ? character_from_json(read_json_file(args.get("chi-file")))
                                             : data.weight.eps.back();
                rep.outputs = json{{"value", to_json(E_p(s, data, phi, chi))}, {"s", s}};
            } else {
                rep.outputs = json{{"value", to_json(E_imp(s, data, phi))}, {"s", s}};
            }
            return 0;
        }
        if (verb == "ap") {
            Cyc a = A_P(data, phi);  // internally asserts both evaluation paths agree
            rep.outputs = json{{"value", to_json(a)}, {"forms_agree", true}};
            rep.check("A_P-two-forms-agree", "true", "true");
            return 0;
        }
        if (verb == "classify") {
            TrivialZeroKind kind = classify_trivial_zero(data, phi);
            rep.outputs = json{{"class", to_string(kind)}, {"P_ordinary", is_P_ordinary(data)}};
            return 0;
        }
    }

    if (group == "lseries") {
        DirichletCharacter chi = args.has("chi-file")
                                     ? character_from_json(read_json_file(args.get("chi-file")))
                                     : DirichletCharacter::trivial(1);
        rep.inputs = to_json(chi);
        if (verb == "lvalue") {
            long k = std::stol(args.get("k"));
            std::vector<Int> removed;
            if (args.has("removed"))
                for (long q : parse_long_list(args.get("removed"))) removed.push_back(Int(q));
            Cyc v = partial_L(chi, 1 - k, removed);
            rep.outputs = json{{"value", to_json(v)}, {"s", 1 - k}};
            return 0;
        }
        if (verb == "gauss") {
            Cyc g = gauss_sum(chi);
            rep.outputs = json{{"value", to_json(g)}};
            // |G(chi)|^2 = conductor for primitive chi
            Cyc norm = g * g.conj();
            rep.check("gauss-norm-equals-conductor", "true",
                      (norm == Cyc(Rat(chi.conductor()))) ? "true" : "false");
            return 0;
        }
    }

    if (group == "eis") {
        auto provider = brute_force_provider();
        if (verb == "coeff") {
            EisensteinSpec spec = eis_spec_from_json(read_json_file(args.get("spec")));
            HalfIntMatrix beta = halfint_from_json(read_json_file(args.get("beta")));
            rep.inputs = json{{"spec", read_json_file(args.get("spec"))}, {"beta", to_json(beta)}};
            CoeffValue v = coeff_c(spec, beta, *provider);
            rep.outputs = json{{"cyc", to_json(v.cyc)}, {"arch", arch_to_json(v.arch)}};
            return 0;
        }
        if (verb == "restrict") {
            EisensteinSpec spec = eis_spec_from_json(read_json_file(args.get("spec")));
            HalfIntMatrix b1 = halfint_from_json(read_json_file(args.get("beta1")));
            HalfIntMatrix b2 = halfint_from_json(read_json_file(args.get("beta2")));
            rep.inputs = json{{"beta1", to_json(b1)}, {"beta2", to_json(b2)}};
            CoeffValue v = restricted_coeff(spec, b1, b2, *provider);
            rep.outputs = json{{"cyc", to_json(v.cyc)}, {"arch", arch_to_json(v.arch)}};
            return 0;
        }
        if (verb == "check-congruence") {
            EisensteinSpec s1 = eis_spec_from_json(read_json_file(args.get("spec1")));
            EisensteinSpec s2 = eis_spec_from_json(read_json_file(args.get("spec2")));
            HalfIntMatrix beta = halfint_from_json(read_json_file(args.get("beta")));
            long e = std::stol(args.get_or("mod-exp", "2"));
            rep.inputs = json{{"beta", to_json(beta)}};
            Cyc c1 = coeff_c(s1, beta, *provider).cyc;
            Cyc c2 = coeff_c(s2, beta, *provider).cyc;
            bool cong = cyc_congruent_mod(c1, c2, s1.p, e);
            rep.outputs = json{{"value1", to_json(c1)}, {"value2", to_json(c2)}, {"congruent", cong}};
            rep.check("interpolation-congruence-mod-p^" + std::to_string(e), "true", cong ? "true" : "false");
            return 0;
        }
    }

    if (group == "family") {
        if (verb == "l-invariant") {
            PadicSeries an = series_from_json(read_json_file(args.get("a-n")));
            PadicSeries anm1 = series_from_json(read_json_file(args.get("a-nm1")));
            std::vector<PadicNumber> center(an.vars().size(), PadicNumber::exact_zero(an.p()));
            if (args.has("center-file")) {
                json cj = read_json_file(args.get("center-file"));
                center.clear();
                for (const auto& c : cj) center.push_back(padic_from_json(an.p(), an.prec(), c));
            }
            rep.outputs = json{{"l_invariant", to_json(l_invariant(an, anm1, center))}};
            return 0;
        }
        if (verb == "derivative-check") {
            PadicSeries u = series_from_json(read_json_file(args.get("u")));
            PadicSeries G = series_from_json(read_json_file(args.get("g")));
            std::vector<PadicNumber> center(u.vars().size(), PadicNumber::exact_zero(u.p()));
            if (args.has("center-file")) {
                json cj = read_json_file(args.get("center-file"));
                center.clear();
                for (const auto& c : cj) center.push_back(padic_from_json(u.p(), u.prec(), c));
            }
            DerivativeIdentityReport r = derivative_identity(u, G, center);
            rep.outputs = json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
            rep.check("derivative-identity", "true", r.equal ? "true" : "false");
            return 0;
        }
    }

    throw std::domain_error("unknown verb: " + group + " " + verb);
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    json report;
    std::string command;
    for (const auto& s : argv) command += (command.empty() ? "" : " ") + s;
    report["command"] = command;
    Args args;
    try {
        args = parse_args(argv);
        int rc = run(args, rep);
        (void)rc;
    } catch (const std::domain_error& e) {
        report["error"] = e.what();
        out << report.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        out << report.dump(2) << "\n";
        return 2;
    }
    report["inputs_digest"] = fnv1a(rep.inputs.dump());
    report["outputs"] = rep.outputs;
    report["checks"] = rep.checks;
    if (!args.has("no-time")) {
        auto t1 = std::chrono::steady_clock::now();
        report["wall_time"] = std::chrono::duration<double>(t1 - t0).count();
    }
    out << report.dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace siegel
