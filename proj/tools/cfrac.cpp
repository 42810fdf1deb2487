// Command-line front end: expansion, verification, tables, moment scans, and
// the primitive-vs-refined benchmark.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cfrac/catalog.hpp"
#include "cfrac/expand.hpp"
#include "cfrac/json_io.hpp"
#include "cfrac/paths.hpp"

using namespace cfrac;

namespace {

constexpr int kExitBadInput = 1;
constexpr int kExitComputeError = 2;
constexpr int kExitCheckFailed = 3;

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return json::parse(in);
}

std::map<std::string, ParamValue> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, ParamValue> out;
    for (const auto& kv : kvs) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        if (val == "sym" || val == "symbolic")
            out.emplace(key, ParamValue::sym());
        else
            out.emplace(key, ParamValue::num(rational_from_string(val)));
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Weight lists on the command line follow the shape convention: the last
// value repeats forever. `count` is how many the computation will touch.
std::vector<Value> parse_weights(const Domain& d, const std::string& csv, size_t count) {
    std::vector<Value> out;
    for (const auto& tok : split_csv(csv)) out.push_back(Value::parse(d, tok));
    if (out.empty()) throw ParseError("empty weight list");
    while (out.size() < count) out.push_back(out.back());
    return out;
}

ExpansionShape parse_shape(const std::string& shape, bool strict_p) {
    if (shape == "c" || shape == "s") return ExpansionShape::c_fraction();
    if (shape == "j") return ExpansionShape::j_fraction(strict_p);
    if (shape.rfind("custom:", 0) == 0) {
        std::vector<int> ms;
        for (const auto& tok : split_csv(shape.substr(7))) ms.push_back(std::stoi(tok));
        return ExpansionShape::custom(ms);
    }
    throw ParseError("unknown shape '" + shape + "' (want c|s|j|custom:<M-list>)");
}

Series load_series(const std::string& input, const std::string& family,
                   const std::vector<std::string>& params, int order) {
    if (!input.empty() && !family.empty())
        throw ParseError("give either --input or --family, not both");
    if (!input.empty()) {
        json j = read_json_input(input);
        if (j.contains("family")) return generate(series_spec_from_json(j));
        Series s = series_from_json(j);
        if (order >= 0 && order != s.order()) {
            if (order > s.order())
                throw ParseError("--order exceeds the coefficients supplied");
            return s.truncated(order);
        }
        return s;
    }
    if (family.empty()) throw ParseError("need --input or --family");
    if (order < 0) throw ParseError("--order is required with --family");
    return generate(SeriesSpec{family, parse_params(params), order});
}

Domain domain_for_weights(const std::string& vars) {
    if (vars.empty()) return Domain::rationals();
    return Domain::polynomials(split_csv(vars));
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
    std::string input, family, shape = "s", algorithm = "refined", gm1_path, output = "json";
    std::vector<std::string> params;
    int order = -1;
    bool strict_p = false;
};

int run_expand(const ExpandArgs& a) {
    Series f = load_series(a.input, a.family, a.params, a.order);
    ExpansionShape shape = parse_shape(a.shape, a.strict_p);
    std::optional<Series> gm1;
    if (!a.gm1_path.empty()) gm1 = series_from_json(read_json_input(a.gm1_path));

    double t0 = now_ms();
    CFraction cf{f.domain(), Value::one(f.domain()), {}, false, 0, {}};
    if (a.algorithm == "refined") {
        cf = expand_refined(f, shape, gm1).cf;
    } else if (a.algorithm == "primitive") {
        if (gm1) throw ParseError("--g-minus-one applies to the refined algorithm only");
        cf = expand_primitive(f, shape);
    } else {
        throw ParseError("unknown algorithm '" + a.algorithm + "'");
    }
    double ms = now_ms() - t0;

    if (a.output == "json") {
        std::cout << expansion_report(cf, digest_series(f), ms).dump(2) << "\n";
    } else {
        std::cout << "domain: " << cf.domain.description() << "\n";
        std::cout << "alpha0 = " << cf.alpha0.to_string() << "\n";
        for (int k = 1; k <= cf.length(); ++k) {
            const CFTerm& t = cf.terms[k - 1];
            std::cout << "level " << k << ": ";
            if (!t.delta.empty()) {
                std::cout << "Delta = ";
                for (size_t j = 0; j < t.delta.size(); ++j) {
                    if (j) std::cout << " + ";
                    std::cout << "(" << t.delta[j].to_string() << ")*t^" << j + 1;
                }
                std::cout << ", ";
            }
            std::cout << "alpha = " << t.alpha.to_string() << ", p = " << t.p << "\n";
        }
        std::cout << cf.status_string() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string check, family, alphas, betas, gammas, vars;
    std::vector<std::string> params;
    int order = 8, size = 6, levels = 6;
    std::string shape = "c";
};

int run_verify(const VerifyArgs& a) {
    if (a.check == "euler-gauss") {
        GkFamily fam = gk_family(a.family, parse_params(a.params));
        std::vector<Series> gs, ds, as;
        for (int k = -1; k <= a.levels; ++k) gs.push_back(fam.g(k, a.order));
        for (int k = 1; k <= a.levels; ++k) {
            ds.push_back(fam.delta(k, a.order));
            as.push_back(fam.a(k, a.order));
        }
        RecurrenceReport rep = euler_gauss_verify(gs, ds, as, a.order);
        std::cout << "euler-gauss " << fam.name << " through t^" << a.order << ": "
                  << rep.to_string() << "\n";
        return rep.ok ? 0 : kExitCheckFailed;
    }
    if (a.check == "flajolet") {
        Domain d = domain_for_weights(a.vars);
        PathWeights w{d, {}, parse_weights(d, a.betas, a.order + 1),
                      parse_weights(d, a.gammas, a.order + 1), {}};
        CheckReport rep = flajolet_check(w, a.order);
        std::cout << "flajolet through n = " << a.order << ": "
                  << (rep.ok ? "pass" : "FAIL") << " (" << rep.detail << ")\n";
        return rep.ok ? 0 : kExitCheckFailed;
    }
    if (a.check == "hankel") {
        Domain Q = Domain::rationals();
        int n = a.size;
        bool ok = true;
        auto show = [&](const char* tag, const CheckReport& rep) {
            std::cout << "hankel " << tag << ": " << (rep.ok ? "pass" : "FAIL") << " ("
                      << rep.detail << ")\n";
            ok = ok && rep.ok;
        };
        if (a.family == "factorial") {
            std::vector<Value> seq;
            for (int i = 0; i <= 2 * n + 1; ++i)
                seq.push_back(Value::of_rational(Q, Rational(factorial(i))));
            std::vector<Value> al;
            for (int j = 1; j <= 2 * n + 1; ++j)
                al.push_back(Value::of_rational(Q, Rational((j + 1) / 2)));
            PathWeights w{Q, al, {}, {}, {}};
            show("S form", hankel_factorization_check(seq, w, n, HankelForm::S));
            show("S' form", hankel_factorization_check(seq, w, n, HankelForm::Sprime));
        } else if (a.family == "motzkin") {
            PathWeights w{Q, {}, std::vector<Value>(2 * n + 1, Value::one(Q)),
                          std::vector<Value>(2 * n + 1, Value::one(Q)), {}};
            TriangularTable t = jacobi_rogers_table(w, 2 * n);
            std::vector<Value> seq;
            for (int i = 0; i <= 2 * n; ++i) seq.push_back(t.at(i, 0));
            show("J form", hankel_factorization_check(seq, w, n, HankelForm::J));
        } else if (a.family == "secant_power") {
            Domain dx = Domain::polynomials({"x"});
            Series e = generate(SeriesSpec{"secant_power", {{"x", ParamValue::sym()}}, n});
            std::vector<Value> seq;
            for (int i = 0; i <= 2 * n; ++i)
                seq.push_back(i % 2 == 0 ? e.coeff(i / 2) : Value::zero(dx));
            std::vector<Value> betas, gammas;
            Value x = Value::variable(dx, "x");
            gammas.push_back(Value::zero(dx));
            for (int k = 1; k <= 2 * n; ++k) {
                betas.push_back((x + Value::of_rational(dx, Rational(k - 1))).scaled(Rational(k)));
                gammas.push_back(Value::zero(dx));
            }
            PathWeights w{dx, {}, betas, gammas, {}};
            show("J form", hankel_factorization_check(seq, w, n, HankelForm::J));
        } else if (!a.betas.empty()) {
            Domain d = domain_for_weights(a.vars);
            PathWeights w{d, {}, parse_weights(d, a.betas, 2 * n + 1),
                          parse_weights(d, a.gammas, 2 * n + 1), {}};
            TriangularTable t = jacobi_rogers_table(w, 2 * n);
            std::vector<Value> seq;
            for (int i = 0; i <= 2 * n; ++i) seq.push_back(t.at(i, 0));
            show("J form", hankel_factorization_check(seq, w, n, HankelForm::J));
        } else if (!a.alphas.empty()) {
            Domain d = domain_for_weights(a.vars);
            PathWeights w{d, parse_weights(d, a.alphas, 2 * n + 2), {}, {}, {}};
            Series s = sfraction_series(d, w.alphas, 2 * n + 1);
            show("S form", hankel_factorization_check(s.coeffs(), w, n, HankelForm::S));
            show("S' form", hankel_factorization_check(s.coeffs(), w, n, HankelForm::Sprime));
        } else {
            throw ParseError("hankel check needs --family or weight flags");
        }
        return ok ? 0 : kExitCheckFailed;
    }
    if (a.check == "gtable") {
        Domain d = domain_for_weights(a.vars);
        CheckReport rep;
        if (!a.alphas.empty()) {
            PathWeights w{d, parse_weights(d, a.alphas, 2 * a.order), {}, {}, {}};
            rep = g_table_correspondence_check(w, a.order, TableKind::S);
        } else {
            PathWeights w{d, {}, parse_weights(d, a.betas, a.order + 1),
                          parse_weights(d, a.gammas, a.order + 1), {}};
            rep = g_table_correspondence_check(w, a.order, TableKind::J);
        }
        std::cout << "gtable correspondence: " << (rep.ok ? "pass" : "FAIL") << " ("
                  << rep.detail << ")\n";
        return rep.ok ? 0 : kExitCheckFailed;
    }
    if (a.check == "roundtrip") {
        Series f = generate(SeriesSpec{a.family, parse_params(a.params), a.order});
        ExpansionShape shape = parse_shape(a.shape, false);
        Expansion e = expand_refined(f, shape);
        CFraction p = expand_primitive(f, shape);
        bool agree = p == e.cf;
        Series back = cf_to_series(e.cf, f.order());
        bool rt = back == f;
        std::cout << "roundtrip " << a.family << " N=" << a.order << ": evaluation "
                  << (rt ? "pass" : "FAIL") << ", algorithms "
                  << (agree ? "agree" : "DISAGREE") << "\n";
        return (rt && agree) ? 0 : kExitCheckFailed;
    }
    throw ParseError("unknown check '" + a.check +
                     "' (want euler-gauss|flajolet|hankel|gtable|roundtrip)");
}

struct TableArgs {
    std::string kind = "S", alphas, betas, gammas, vars;
    int size = 6;
};

int run_table(const TableArgs& a) {
    Domain d = domain_for_weights(a.vars);
    if (a.kind == "J") {
        PathWeights w{d, {}, parse_weights(d, a.betas, a.size + 1),
                      parse_weights(d, a.gammas, a.size + 1), {}};
        std::cout << table_to_json(jacobi_rogers_table(w, a.size)).dump(2) << "\n";
        return 0;
    }
    if (a.kind == "S" || a.kind == "Sprime") {
        auto alphas = parse_weights(d, a.alphas, 2 * a.size);
        auto [s, sp] = stieltjes_tables(d, alphas, a.size);
        std::cout << table_to_json(a.kind == "S" ? s : sp).dump(2) << "\n";
        return 0;
    }
    throw ParseError("unknown table kind '" + a.kind + "' (want J|S|Sprime)");
}

struct MomentsArgs {
    std::string input, family = "moment_probe";
    std::vector<std::string> params;
    int budget = 30;
};

int run_moments(const MomentsArgs& a) {
    std::vector<Rational> seq;
    Series s = a.input.empty()
                   ? generate(SeriesSpec{a.family, parse_params(a.params), a.budget})
                   : series_from_json(read_json_input(a.input));
    if (s.domain().kind() != DomainKind::Rationals)
        throw BadParams("the positivity scan needs a rational sequence");
    for (int i = 0; i <= s.order(); ++i) seq.push_back(s.coeff(i).as_rational());
    ScanResult r = stieltjes_positivity_scan(seq);
    json out{{"schema", kSchemaTag}, {"budget", static_cast<int>(seq.size()) - 1}};
    switch (r.kind) {
        case ScanResult::Kind::FoundNegative:
            out["status"] = "found_negative";
            out["first_negative"] = r.index;
            break;
        case ScanResult::Kind::Terminated:
            out["status"] = "terminated";
            out["scanned"] = r.index;
            break;
        case ScanResult::Kind::BudgetExhausted:
            out["status"] = "budget_exhausted";
            out["scanned"] = r.index;
            break;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct BenchArgs {
    std::string family = "factorial", ns = "100,200,500", algorithms = "both", plot_path;
};

int run_bench(const BenchArgs& a) {
    bool run_prim = a.algorithms == "both" || a.algorithms == "primitive";
    bool run_ref = a.algorithms == "both" || a.algorithms == "refined";
    if (!run_prim && !run_ref) throw ParseError("unknown --algorithms value");

    std::map<std::string, ParamValue> params;
    if (a.family == "rising_factorial") params.emplace("a", ParamValue::sym());

    std::cout << "algorithm,family,N,ms,size_metric\n";
    std::ostringstream plot;
    plot << "# log10(N) log10(primitive_ms) log10(refined_ms)\n";
    for (const auto& tok : split_csv(a.ns)) {
        int n = std::stoi(tok);
        Series f = generate(SeriesSpec{a.family, params, n});
        ExpansionShape shape = ExpansionShape::c_fraction();

        // warm-up run discarded (it collects the size metric), then median of 3
        auto time_runs = [&](auto&& once) {
            std::vector<double> ts;
            for (int i = 0; i < 3; ++i) {
                double t0 = now_ms();
                once();
                ts.push_back(now_ms() - t0);
            }
            std::sort(ts.begin(), ts.end());
            return ts[1];
        };

        CFraction prim_cf{f.domain(), Value::one(f.domain()), {}, false, 0, {}};
        CFraction ref_cf = prim_cf;
        ExpandStats prim_stats, ref_stats;
        double prim_ms = 0, ref_ms = 0;
        if (run_prim) {
            prim_cf = expand_primitive(f, shape, &prim_stats);
            prim_ms = time_runs([&] { expand_primitive(f, shape); });
        }
        if (run_ref) {
            ref_cf = expand_refined(f, shape, std::nullopt, &ref_stats).cf;
            ref_ms = time_runs([&] { expand_refined(f, shape); });
        }
        if (run_prim && run_ref && !(prim_cf == ref_cf))
            throw Error("primitive and refined disagree on " + a.family + " at N = " + tok +
                        "; timings withheld");

        auto metric = [&](const ExpandStats& s) {
            return f.domain().kind() == DomainKind::Rationals
                       ? std::to_string(s.peak_bits)
                       : std::to_string(s.peak_degree);
        };
        if (run_prim)
            std::cout << "primitive," << a.family << "," << n << "," << prim_ms << ","
                      << metric(prim_stats) << "\n";
        if (run_ref)
            std::cout << "refined," << a.family << "," << n << "," << ref_ms << ","
                      << metric(ref_stats) << "\n";
        if (run_prim && run_ref)
            plot << std::log10(double(n)) << " " << std::log10(prim_ms) << " "
                 << std::log10(ref_ms) << "\n";
    }
    if (!a.plot_path.empty()) {
        std::ofstream out(a.plot_path);
        out << plot.str();
    }
    return 0;
}

int run_catalog(const std::string& output) {
    if (output == "json") {
        json arr = json::array();
        for (const auto& f : list_families())
            arr.push_back(json{{"name", f.name},
                               {"params", f.params},
                               {"domain", f.domain_note},
                               {"pattern", f.pattern_note}});
        std::cout << json{{"schema", kSchemaTag}, {"families", arr}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : list_families()) {
        std::cout << f.name;
        if (!f.params.empty()) {
            std::cout << "(";
            for (size_t i = 0; i < f.params.size(); ++i)
                std::cout << (i ? "," : "") << f.params[i];
            std::cout << ")";
        }
        std::cout << "  [" << f.domain_note << "]\n    " << f.pattern_note << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continued-fraction expansion of truncated power series"};
    app.require_subcommand(1);

    ExpandArgs ea;
    auto* expand_cmd = app.add_subcommand("expand", "expand a series as a continued fraction");
    expand_cmd->add_option("--input", ea.input, "series JSON file, or - for stdin");
    expand_cmd->add_option("--family", ea.family, "catalog family name");
    expand_cmd->add_option("--params", ea.params, "family parameters k=v (v rational or sym)")
        ->delimiter(',');
    expand_cmd->add_option("--order", ea.order, "order budget N");
    expand_cmd->add_option("--shape", ea.shape, "c|s|j|custom:<M-list> (default s)");
    expand_cmd->add_flag("--strict-p", ea.strict_p, "fail loudly when p_k deviates (j shape)");
    expand_cmd->add_option("--algorithm", ea.algorithm, "refined|primitive (default refined)");
    expand_cmd->add_option("--g-minus-one", ea.gm1_path, "series JSON file for g_{-1}");
    expand_cmd->add_option("--output", ea.output, "json|text (default json)");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run a consistency check");
    verify_cmd->add_option("--check", va.check, "euler-gauss|flajolet|hankel|gtable|roundtrip")
        ->required();
    verify_cmd->add_option("--family", va.family, "family name (per check)");
    verify_cmd->add_option("--params", va.params, "family parameters")->delimiter(',');
    verify_cmd->add_option("--order", va.order, "check order");
    verify_cmd->add_option("--size", va.size, "Hankel block size");
    verify_cmd->add_option("--K", va.levels, "number of recurrence levels");
    verify_cmd->add_option("--alphas", va.alphas, "Dyck fall weights, comma separated");
    verify_cmd->add_option("--betas", va.betas, "Motzkin fall weights");
    verify_cmd->add_option("--gammas", va.gammas, "Motzkin level weights");
    verify_cmd->add_option("--vars", va.vars, "polynomial variables for the weights");
    verify_cmd->add_option("--shape", va.shape, "shape for the roundtrip check");

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "print a triangular table as JSON");
    table_cmd->add_option("--kind", ta.kind, "J|S|Sprime")->required();
    table_cmd->add_option("--alphas", ta.alphas, "Dyck fall weights");
    table_cmd->add_option("--betas", ta.betas, "Motzkin fall weights");
    table_cmd->add_option("--gammas", ta.gammas, "Motzkin level weights");
    table_cmd->add_option("--vars", ta.vars, "polynomial variables for the weights");
    table_cmd->add_option("--size", ta.size, "table size N");

    MomentsArgs ma;
    auto* moments_cmd = app.add_subcommand("moments", "Stieltjes positivity scan");
    moments_cmd->add_option("--input", ma.input, "series JSON file");
    moments_cmd->add_option("--family", ma.family, "catalog family (default moment_probe)");
    moments_cmd->add_option("--params", ma.params, "family parameters")->delimiter(',');
    moments_cmd->add_option("--budget", ma.budget, "order budget");

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "compare the two algorithms (CSV)");
    bench_cmd->add_option("--family", ba.family, "factorial|rising_factorial");
    bench_cmd->add_option("--Ns", ba.ns, "comma-separated orders");
    bench_cmd->add_option("--algorithms", ba.algorithms, "both|refined|primitive");
    bench_cmd->add_option("--emit-plot", ba.plot_path, "write a log-log data file");

    std::string catalog_output = "text";
    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in series families");
    auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list families");
    catalog_cmd->add_option("--output", catalog_output, "text|json");
    catalog_list_cmd->add_option("--output", catalog_output, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (expand_cmd->parsed()) return run_expand(ea);
        if (verify_cmd->parsed()) return run_verify(va);
        if (table_cmd->parsed()) return run_table(ta);
        if (moments_cmd->parsed()) return run_moments(ma);
        if (bench_cmd->parsed()) return run_bench(ba);
        if (catalog_cmd->parsed()) return run_catalog(catalog_output);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cout << error_object(e).dump(2) << "\n";
        return kExitComputeError;
    }
    return kExitBadInput;
}
