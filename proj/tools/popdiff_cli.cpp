// popdiff: construct extremal difference sets, evaluate representation
// functions, compute bounds, run the exhaustive oracle, verify, and sweep.
//
// Exit codes: 0 success, 1 usage/parse error, 2 precondition failure,
//             3 check failure, 4 cap exceeded.

#include "popdiff/bounds.hpp"
#include "popdiff/constructions.hpp"
#include "popdiff/errors.hpp"
#include "popdiff/oracle.hpp"
#include "popdiff/repr.hpp"
#include "popdiff/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace popdiff;
using nlohmann::json;

namespace {

int g_exit = 0;

Rat parse_alpha(const std::string& s) {
    Rat a = parse_rational(s);
    if (a <= 0 || a >= 1) throw precondition_error("alpha must satisfy 0 < alpha < 1, got " + s);
    return a;
}

long long gamma_to_d(const Rat& gamma, const Rat& alpha) {
    // round half up, recorded in output via the d column
    return to_ll(rat_round_half_up((Rat(1) + gamma) / alpha));
}

std::vector<long long> parse_ll_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return {to_ll(Int(s))};
    std::istringstream is(s);
    std::string a, b, c;
    std::getline(is, a, ':');
    std::getline(is, b, ':');
    std::getline(is, c);
    if (c.empty()) throw parse_error("range must be start:stop:step, got '" + s + "'");
    long long start = to_ll(Int(a)), stop = to_ll(Int(b)), step = to_ll(Int(c));
    if (step <= 0) throw parse_error("range step must be positive");
    std::vector<long long> out;
    for (long long v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

std::vector<Rat> parse_rat_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return {parse_rational(s)};
    std::istringstream is(s);
    std::string a, b, c;
    std::getline(is, a, ':');
    std::getline(is, b, ':');
    std::getline(is, c);
    if (c.empty()) throw parse_error("range must be start:stop:step, got '" + s + "'");
    Rat start = parse_rational(a), stop = parse_rational(b), step = parse_rational(c);
    if (step <= 0) throw parse_error("range step must be positive");
    std::vector<Rat> out;
    for (Rat v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << content;
}

void emit_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << j.dump(2) << "\n";
    else
        write_text_file(path, j.dump(2) + "\n");
}

struct ConstructCommon {
    std::string out = "set.json";
    std::string cert = "certificate.json";
};

void add_construct_outputs(CLI::App* cmd, ConstructCommon& c) {
    cmd->add_option("--out", c.out, "set file path")->capture_default_str();
    cmd->add_option("--cert", c.cert, "certificate file path")->capture_default_str();
}

void finish_construct(const AnySet& set, const json& cert, const ConstructCommon& paths,
                      const std::string& summary) {
    save_set_file(set, paths.out);
    write_text_file(paths.cert, cert.dump(2) + "\n");
    std::cout << summary << " out=" << paths.out << " cert=" << paths.cert << "\n";
}

void setup_construct(CLI::App& app) {
    auto* con = app.add_subcommand("construct", "build a set with a certificate");
    con->require_subcommand(1);

    { // ap
        auto* cmd = con->add_subcommand("ap", "arithmetic progression, M_D = 0 for D <= floor(1/alpha)");
        auto n = std::make_shared<long long>(0);
        auto alpha = std::make_shared<std::string>();
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--n", *n, "ambient N")->required();
        cmd->add_option("--alpha", *alpha, "density, exact rational like 3/10")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            Rat a = parse_alpha(*alpha);
            auto [set, cert] = construct_ap(*n, a);
            std::ostringstream os;
            os << "size=" << set.size() << " density=" << format_rational(set.density()) << "="
               << decimal_string(set.density());
            if (cert.a >= 2) os << " M[1," << cert.a << ")=" << m_d(set, cert.a);
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
    { // block
        auto* cmd = con->add_subcommand("block", "block pattern attaining the closed-form cap");
        auto n = std::make_shared<long long>(0);
        auto d = std::make_shared<long long>(0);
        auto alpha = std::make_shared<std::string>();
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--n", *n, "ambient N")->required();
        cmd->add_option("--d", *d, "window bound D")->required();
        cmd->add_option("--alpha", *alpha, "density")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            Rat a = parse_alpha(*alpha);
            auto [set, cert] = construct_block(*n, *d, a);
            std::ostringstream os;
            os << "size=" << set.size() << " density=" << format_rational(set.density()) << "="
               << decimal_string(set.density()) << " k=" << cert.k << " M[1," << *d
               << ")=" << m_d(set, *d) << " cap=" << 2 * cert.k;
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
    { // parabola
        auto* cmd = con->add_subcommand("parabola", "union of k parabolas in the p x p grid");
        auto p = std::make_shared<long long>(0);
        auto k = std::make_shared<long long>(0);
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--p", *p, "odd prime")->required();
        cmd->add_option("--k", *k, "number of parabolas")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            auto [set, cert] = construct_parabola_union(PrimeModulus(*p), *k);
            std::ostringstream os;
            os << "size=" << set.size() << " n_star=" << cert.n_star
               << " max_nonzero_r=" << max_nonzero_repr_grid(set) << " capacity=" << cert.capacity;
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
    { // project
        auto* cmd = con->add_subcommand("project", "project a grid set into Z/(p^2 s)Z");
        auto in = std::make_shared<std::string>();
        auto s = std::make_shared<long long>(0);
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--in", *in, "grid set file")->required();
        cmd->add_option("--s", *s, "fiber count s >= 1")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            AnySet any = load_set_file(*in);
            const auto* grid = std::get_if<GridSet>(&any);
            if (!grid) throw precondition_error("project: input must be a grid-ambient set");
            auto [set, cert] = project_to_cyclic(*grid, *s);
            long long measured = max_nonzero_repr_cyclic(set);
            std::ostringstream os;
            os << "size=" << set.size() << " modulus=" << set.modulus
               << " max_nonzero_r=" << measured << " cap=" << cert.cap;
            if (measured > cert.cap)
                std::cerr << "warning: measured max " << measured << " exceeds h(s+1) = " << cert.cap
                          << " (the projection cap does not hold for all sets when s >= 2)\n";
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
    { // cyclic
        auto* cmd = con->add_subcommand("cyclic", "dense cyclic set in Z/(p^2 s)Z with capped repr");
        auto p = std::make_shared<long long>(0);
        auto s = std::make_shared<long long>(0);
        auto alpha = std::make_shared<std::string>();
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--p", *p, "odd prime")->required();
        cmd->add_option("--s", *s, "fiber count s >= 1")->required();
        cmd->add_option("--alpha", *alpha, "density, 0 < alpha < 1/2")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            Rat a = parse_alpha(*alpha);
            auto [set, cert] = construct_cyclic(PrimeModulus(*p), *s, a);
            std::ostringstream os;
            os << "size=" << set.size() << " modulus=" << set.modulus << " k=" << cert.k
               << " density=" << format_rational(set.density()) << "="
               << decimal_string(set.density()) << " max_nonzero_r=" << max_nonzero_repr_cyclic(set)
               << " cap=" << cert.cap;
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
    { // integer
        auto* cmd = con->add_subcommand("integer", "integer set in [N] via the cyclic construction");
        auto n = std::make_shared<long long>(0);
        auto alpha = std::make_shared<std::string>();
        auto paths = std::make_shared<ConstructCommon>();
        cmd->add_option("--n", *n, "ambient N")->required();
        cmd->add_option("--alpha", *alpha, "density, 0 < alpha < 1/2")->required();
        add_construct_outputs(cmd, *paths);
        cmd->callback([=] {
            Rat a = parse_alpha(*alpha);
            auto [set, cert] = construct_integer(*n, a);
            std::ostringstream os;
            os << "size=" << set.size() << " p=" << cert.cyclic.p << " s=" << cert.cyclic.s
               << " k=" << cert.cyclic.k << " density=" << format_rational(set.density()) << "="
               << decimal_string(set.density()) << " M[1," << *n << ")=" << m_d(set, *n)
               << " cap=" << cert.cyclic.cap;
            finish_construct(AnySet{set}, to_json(cert), *paths, os.str());
        });
    }
}

void setup_eval(CLI::App& app) {
    auto* cmd = app.add_subcommand("eval", "representation table of a set file as CSV");
    auto in = std::make_shared<std::string>();
    auto d = std::make_shared<long long>(0);
    auto full = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "set file")->required();
    cmd->add_option("--d", *d, "window bound: integer sets use [1, D), cyclic use 0 < |x| <= D");
    cmd->add_flag("--full", *full, "full window (all differences)");
    cmd->add_option("--out", *out, "CSV path (default stdout)");
    cmd->callback([=] {
        AnySet any = load_set_file(*in);
        WindowSpec w{WindowSpec::integer_window, 0};
        if (std::holds_alternative<IntegerSet>(any)) {
            long long n = std::get<IntegerSet>(any).ambient;
            w = WindowSpec{WindowSpec::integer_window, *full ? std::max<long long>(n, 2) : *d};
        } else if (std::holds_alternative<CyclicSet>(any)) {
            w = *full ? WindowSpec{WindowSpec::cyclic_full, 0} : WindowSpec{WindowSpec::cyclic_window, *d};
        } else {
            if (!*full) throw precondition_error("grid sets support --full only");
            w = WindowSpec{WindowSpec::grid_full, 0};
        }
        if (!*full && *d < 1) throw precondition_error("eval needs --d or --full");
        ReprTable t = repr_table(any, w);
        if (out->empty() || *out == "-") {
            t.write_csv(std::cout);
        } else {
            std::ofstream os(*out);
            if (!os) throw error("cannot write " + *out);
            t.write_csv(os);
        }
        std::cout << "M=" << t.m_max << "\n";
    });
}

void setup_bounds(CLI::App& app) {
    auto* cmd = app.add_subcommand("bounds", "closed-form lower/upper bounds as JSON");
    auto n = std::make_shared<long long>(0);
    auto d = std::make_shared<long long>(0);
    auto gamma = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto cyclic = std::make_shared<bool>(false);
    auto p = std::make_shared<long long>(0);
    auto s = std::make_shared<long long>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "ambient N")->required();
    cmd->add_option("--d", *d, "window bound D");
    cmd->add_option("--gamma", *gamma, "window via gamma: D = round((1+gamma)/alpha)");
    cmd->add_option("--alpha", *alpha, "density")->required();
    cmd->add_flag("--cyclic", *cyclic, "cyclic ambient: include the counting bound");
    cmd->add_option("--p", *p, "prime for the parabola-projection cap");
    cmd->add_option("--s", *s, "fiber count for the parabola-projection cap");
    cmd->add_option("--out", *out, "JSON path (default stdout)");
    cmd->callback([=] {
        Rat a = parse_alpha(*alpha);
        long long dd = *d;
        if (dd == 0 && !gamma->empty()) dd = gamma_to_d(parse_rational(*gamma), a);
        if (dd == 0) throw precondition_error("bounds needs --d or --gamma");
        std::optional<std::pair<long long, long long>> ps;
        if (*p > 0 && *s > 0) ps = {*p, *s};
        emit_json(to_json(make_bounds_report(*n, dd, a, *cyclic, ps)), *out);
    });
}

void setup_oracle(CLI::App& app) {
    auto* cmd = app.add_subcommand("oracle", "exhaustive exact f with witness");
    auto n = std::make_shared<long long>(0);
    auto d = std::make_shared<long long>(0);
    auto alpha = std::make_shared<std::string>();
    auto cap = std::make_shared<long long>(20);
    auto jobs = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "ambient N")->required();
    cmd->add_option("--d", *d, "window bound D")->required();
    cmd->add_option("--alpha", *alpha, "density")->required();
    cmd->add_option("--cap", *cap, "largest admissible N")->capture_default_str();
    cmd->add_option("--jobs", *jobs, "worker threads (output is identical for any value)")
        ->capture_default_str();
    cmd->add_option("--out", *out, "JSON path (default stdout)");
    cmd->callback([=] {
        OracleConfig cfg{*cap, *jobs};
        OracleResult r = exact_f(*n, *d, parse_alpha(*alpha), cfg);
        emit_json(to_json(r), *out);
    });
}

void setup_verify(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "run the theorem-check suite");
    auto use_default = std::make_shared<bool>(false);
    auto criteria = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0xC0FFEEULL);
    auto jobs = std::make_shared<int>(1);
    auto negative = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_flag("--default", *use_default, "run every criterion");
    cmd->add_option("--criteria", *criteria, "comma-separated criterion numbers (1..11)");
    cmd->add_option("--seed", *seed, "seed for the randomized checks")->capture_default_str();
    cmd->add_option("--jobs", *jobs, "oracle worker threads")->capture_default_str();
    cmd->add_flag("--negative-control", *negative,
                  "measure windows over d <= D instead of d < D; checks must then fail");
    cmd->add_option("--out", *out, "CSV report path");
    cmd->callback([=] {
        VerifyConfig cfg;
        if (*use_default) {
            cfg = default_verify_config();
        } else if (!criteria->empty()) {
            std::istringstream is(*criteria);
            std::string tok;
            while (std::getline(is, tok, ',')) cfg.criteria.push_back(std::stoi(tok));
        }
        cfg.seed = *seed;
        cfg.jobs = *jobs;
        cfg.window_off_by_one = *negative;
        VerifyReport rep = verify_theorem_suite(cfg);
        for (int crit : cfg.criteria) {
            std::size_t fails = rep.failure_count(crit);
            std::cout << (fails == 0 ? "[PASS] " : "[FAIL] ") << "criterion " << crit << ": "
                      << criterion_title(crit) << " (" << rep.record_count(crit) << " checks, "
                      << fails << " failures)\n";
        }
        std::cout << "total: " << rep.records.size() << " checks, " << rep.failure_count()
                  << " failures\n";
        if (!out->empty()) {
            std::ofstream os(*out);
            if (!os) throw error("cannot write " + *out);
            rep.write_csv(os);
        }
        if (rep.failure_count() > 0) g_exit = 3;
    });
}

void setup_sweep(CLI::App& app) {
    auto* cmd = app.add_subcommand("sweep", "bounds/construction/oracle grid as CSV");
    auto n = std::make_shared<std::string>();
    auto d = std::make_shared<std::string>();
    auto gamma = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto cap = std::make_shared<long long>(20);
    auto jobs = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "N value or range start:stop:step")->required();
    cmd->add_option("--d", *d, "D value or range");
    cmd->add_option("--gamma", *gamma, "gamma value or range; D = round((1+gamma)/alpha)");
    cmd->add_option("--alpha", *alpha, "alpha value or range")->required();
    cmd->add_option("--oracle-cap", *cap, "compute exact f for N up to this")->capture_default_str();
    cmd->add_option("--jobs", *jobs, "oracle worker threads")->capture_default_str();
    cmd->add_option("--out", *out, "CSV path (default stdout)");
    cmd->callback([=] {
        if (d->empty() == gamma->empty())
            throw precondition_error("sweep needs exactly one of --d / --gamma");
        std::vector<long long> ns = parse_ll_range(*n);
        std::vector<Rat> alphas = parse_rat_range(*alpha);
        std::ostringstream os;
        os << "n,d,alpha,gamma,regime,lb_inclusion_exclusion,lb_fourier,ub_block,construction,"
              "construction_m,f_exact\n";
        for (long long nn : ns) {
            for (const Rat& aa : alphas) {
                std::vector<long long> ds;
                if (!d->empty()) {
                    ds = parse_ll_range(*d);
                } else {
                    for (const Rat& g : parse_rat_range(*gamma)) ds.push_back(gamma_to_d(g, aa));
                }
                for (long long dd : ds) {
                    if (dd < 2 || dd > nn || aa <= 0 || aa >= 1) continue;
                    BoundsReport rep = make_bounds_report(nn, dd, aa, false);
                    os << nn << "," << dd << "," << format_rational(aa) << ","
                       << format_rational(rep.params.gamma) << "," << regime_tag_name(rep.regime.tag)
                       << "," << decimal_string(rep.lb_ie) << "," << decimal_string(rep.lb_fourier_v)
                       << ",";
                    if (rep.ub_block_v) os << decimal_string(*rep.ub_block_v);
                    os << ",";
                    if (rep.params.gamma <= 0) {
                        auto [set, cert] = construct_ap(nn, aa);
                        os << "ap," << m_d(set, dd);
                    } else if (block_hypotheses_hold(nn, dd, aa)) {
                        auto [set, cert] = construct_block(nn, dd, aa);
                        os << "block," << m_d(set, dd);
                    } else {
                        os << ",";
                    }
                    os << ",";
                    if (nn <= *cap) os << exact_f(nn, dd, aa, OracleConfig{*cap, *jobs}).f;
                    os << "\n";
                }
            }
        }
        if (out->empty() || *out == "-") {
            std::cout << os.str();
        } else {
            write_text_file(*out, os.str());
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"popular-difference toolkit: constructions, bounds, oracle, verification"};
    app.require_subcommand(1);
    setup_construct(app);
    setup_eval(app);
    setup_bounds(app);
    setup_oracle(app);
    setup_verify(app);
    setup_sweep(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
