// Command-line front end: exponential sums, arc dissection, identity
// verification, transference pipeline, witness counting, trend scans.
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylab/arcs.hpp"
#include "weylab/expsum.hpp"
#include "weylab/parse.hpp"
#include "weylab/polycore.hpp"
#include "weylab/primetools.hpp"
#include "weylab/spectral.hpp"
#include "weylab/vaughan.hpp"
#include "weylab/witness.hpp"

using json = nlohmann::ordered_json;
using namespace weylab;

namespace {

constexpr const char* kVersion = "weylab 1.0.0";

// 12 significant digits on every floating field
double sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json phase_json(const ParsedPhase& p) {
    return {{"a", p.phase.a},
            {"q", p.phase.q},
            {"theta", sig12(p.phase.theta)},
            {"approximated", p.approximated}};
}

std::string cache_path_for(i64 limit) {
    const char* dir = std::getenv("WEYLAB_CACHE_DIR");
    if (!dir || !*dir) return "";
    return std::string(dir) + "/sieve_" + std::to_string(limit) + ".bin";
}

PrimeTable table_for(i64 limit) {
    std::string cache = cache_path_for(limit);
    if (!cache.empty()) return PrimeTable::load_or_build(limit, cache);
    return PrimeTable::build(limit);
}

json triples_json(const std::vector<Triple>& ts) {
    json arr = json::array();
    for (const Triple& t : ts) arr.push_back({{"x", t.x}, {"y", t.y}, {"z", t.z}});
    return arr;
}

int dispatch(CLI::App& app, int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle-method laboratory: weighted exponential sums over polynomials,"
                 " arc dissection, identity checks, transference, witness finding"};
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // usage problems exit 1; --help/--version exit 0
        return code == 0 ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "precondition"}}.dump() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "resource"}}.dump() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "resource"}}.dump() << "\n";
        return 3;
    }
}

namespace {

int dispatch(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (0 = all cores)");
    app.set_version_flag("--version", std::string(kVersion) + " (" + __VERSION__ + ", OpenMP)");

    // ---- sieve ----
    auto* sieve = app.add_subcommand("sieve", "build the prime table, report the count");
    i64 sv_limit = 0;
    std::string sv_cache;
    sieve->add_option("--limit", sv_limit, "sieve upper bound")->required();
    sieve->add_option("--cache", sv_cache, "cache file path");

    // ---- expsum ----
    auto* expsum = app.add_subcommand("expsum", "weighted exponential sum over psi");
    std::string ex_psi, ex_phase, ex_weight = "unit";
    i64 ex_n = 0, ex_limit = 0;
    expsum->add_option("--psi", ex_psi)->required();
    expsum->add_option("--phase", ex_phase)->required();
    expsum->add_option("--n", ex_n)->required();
    expsum->add_option("--weight", ex_weight, "unit | poly:... | prime:b,W | deltaprime:b,W");
    expsum->add_option("--limit", ex_limit, "sieve limit override");

    // ---- arcs ----
    auto* arcs = app.add_subcommand("arcs", "arc dissection of the circle");
    auto* classify_cmd = arcs->add_subcommand("classify", "major/minor classification of alpha");
    std::string ac_scheme = "pownu:0.2", ac_psi, ac_alpha;
    i64 ac_n = 0;
    classify_cmd->add_option("--scheme", ac_scheme, "pownu:NU | logpower:B | fixed:Q,HW");
    classify_cmd->add_option("--psi", ac_psi)->required();
    classify_cmd->add_option("--n", ac_n)->required();
    classify_cmd->add_option("--alpha", ac_alpha)->required();
    auto* moment_cmd = arcs->add_subcommand("moment", "grid moment of the weighted sum");
    std::string am_psi, am_weight = "unit";
    i64 am_n = 0, am_grid = 0;
    double am_rho = 2.0;
    bool am_exact = false;
    moment_cmd->add_option("--psi", am_psi)->required();
    moment_cmd->add_option("--n", am_n)->required();
    moment_cmd->add_option("--rho", am_rho)->required();
    moment_cmd->add_option("--grid", am_grid)->required();
    moment_cmd->add_option("--weight", am_weight);
    moment_cmd->add_flag("--exact-capable", am_exact, "require the even-moment Nyquist grid");

    // ---- vaughan ----
    auto* vaughan = app.add_subcommand("vaughan", "prime-weight decomposition checks");
    auto* verify_cmd = vaughan->add_subcommand("verify", "reassemble the prime-weighted sum");
    std::string vv_psi, vv_alpha;
    i64 vv_n = 0, vv_b = 1, vv_w = 1;
    double vv_scheme_b = 1.0;
    verify_cmd->add_option("--psi", vv_psi)->required();
    verify_cmd->add_option("--alpha", vv_alpha)->required();
    verify_cmd->add_option("--n", vv_n)->required();
    verify_cmd->add_option("--b", vv_b);
    verify_cmd->add_option("--w", vv_w);
    verify_cmd->add_option("--scheme-b", vv_scheme_b, "log-power arc exponent");

    // ---- transfer ----
    auto* transfer = app.add_subcommand("transfer", "residue-class normalization pipeline");
    std::string tr_psi;
    i64 tr_n = 0, tr_w = 0;
    double tr_eta = 0.2, tr_eps = 0.05, tr_delta = 0.3, tr_rho = 2.5;
    std::string tr_csv;
    transfer->add_option("--n", tr_n)->required();
    transfer->add_option("--w", tr_w, "forced primorial W (0 = auto)");
    transfer->add_option("--psi", tr_psi)->required();
    transfer->add_option("--eta", tr_eta, "spectrum threshold");
    transfer->add_option("--eps", tr_eps, "Bohr radius");
    transfer->add_option("--delta", tr_delta, "target density");
    transfer->add_option("--rho", tr_rho, "restriction exponent");
    transfer->add_option("--export-signal", tr_csv, "write the signal as CSV (index, re, im)");

    // ---- witness ----
    auto* witness = app.add_subcommand("witness", "solutions of x - y = psi(z), W z + 1 prime");
    auto* count_cmd = witness->add_subcommand("count", "count solutions");
    std::string wc_set, wc_psi, wc_method = "both";
    i64 wc_w = 1, wc_cap = 16;
    count_cmd->add_option("--set", wc_set, "file, or uniform:n=..,delta=..,seed=..")->required();
    count_cmd->add_option("--psi", wc_psi)->required();
    count_cmd->add_option("--w", wc_w);
    count_cmd->add_option("--method", wc_method, "fft | brute | both");
    count_cmd->add_option("--sample-cap", wc_cap);
    auto* find_cmd = witness->add_subcommand("find", "density-increment search");
    std::string wf_set, wf_psi;
    i64 wf_w = 1;
    find_cmd->add_option("--set", wf_set)->required();
    find_cmd->add_option("--psi", wf_psi)->required();
    find_cmd->add_option("--w", wf_w);

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "CSV trend experiments");
    auto* decay_cmd = scan->add_subcommand("minor-decay", "|S|/N across sizes at fixed alpha");
    std::string sd_psi = "x^2", sd_alpha = "0.618033988749895", sd_sizes = "10000,40000,160000";
    i64 sd_b = 1, sd_w = 1;
    decay_cmd->add_option("--psi", sd_psi);
    decay_cmd->add_option("--alpha", sd_alpha);
    decay_cmd->add_option("--sizes", sd_sizes, "comma-separated N list");
    decay_cmd->add_option("--b", sd_b);
    decay_cmd->add_option("--w", sd_w);
    auto* gauss_cmd = scan->add_subcommand("gauss-ratio", "|G(a,q)|/sqrt(q) over primes q");
    i64 sg_qmax = 2000, sg_samples = 4;
    u64 sg_seed = 1;
    gauss_cmd->add_option("--qmax", sg_qmax);
    gauss_cmd->add_option("--samples", sg_samples, "random a per q besides {1,2,3,q-1}");
    gauss_cmd->add_option("--seed", sg_seed);

    app.parse(argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    if (*sieve) {
        PrimeTable T = sv_cache.empty() ? table_for(sv_limit) : PrimeTable::load_or_build(sv_limit, sv_cache);
        json out = {{"limit", T.limit()}, {"primes", T.count_primes()}};
        if (!sv_cache.empty()) out["cache"] = sv_cache;
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*expsum) {
        IntPolynomial psi = parse_psi(ex_psi);
        ParsedPhase ph = parse_phase(ex_phase);
        Weight w = parse_weight(ex_weight);
        cd s;
        if (w.needs_sieve()) {
            i64 need = narrow_i64(checked_add(checked_mul(i128(w.W), ex_n), w.b), "sieve bound");
            PrimeTable T = table_for(std::max(ex_limit, need));
            s = weyl_sum(psi, ph.phase, ex_n, w, &T);
        } else {
            s = weyl_sum(psi, ph.phase, ex_n, w);
        }
        std::cout << json{{"re", sig12(s.real())},
                          {"im", sig12(s.imag())},
                          {"n_terms", ex_n},
                          {"method", "split-phase"},
                          {"phase", phase_json(ph)}}
                         .dump()
                  << "\n";
        return 0;
    }

    if (*classify_cmd) {
        IntPolynomial psi = parse_psi(ac_psi);
        ArcScheme scheme = [&] {
            if (ac_scheme.rfind("pownu:", 0) == 0)
                return ArcScheme::power_nu(std::stod(ac_scheme.substr(6)), ac_n, psi);
            if (ac_scheme.rfind("logpower:", 0) == 0)
                return ArcScheme::log_power(std::stod(ac_scheme.substr(9)), ac_n, psi);
            if (ac_scheme.rfind("fixed:", 0) == 0) {
                std::string body = ac_scheme.substr(6);
                size_t comma = body.find(',');
                if (comma == std::string::npos)
                    throw std::domain_error("fixed scheme needs Q,halfwidth");
                return ArcScheme::fixed(std::stoll(body.substr(0, comma)),
                                        std::stod(body.substr(comma + 1)));
            }
            throw std::domain_error("unknown scheme: " + ac_scheme);
        }();
        ParsedPhase ph = parse_phase(ac_alpha);
        double alpha = ph.phase.real_value();
        ArcClass cls = classify(scheme, alpha);
        cd contribution = weyl_sum(psi, ph.phase, ac_n, Weight::unit());
        json out = {{"alpha", sig12(alpha)},
                    {"major", cls.major},
                    {"a", cls.a},
                    {"q", cls.q},
                    {"measure", sig12(2.0 * scheme.halfwidth(cls.q))},
                    {"contribution", sig12(std::abs(contribution))}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*moment_cmd) {
        IntPolynomial psi = parse_psi(am_psi);
        Weight w = parse_weight(am_weight);
        double value;
        if (w.needs_sieve()) {
            i64 need = narrow_i64(checked_add(checked_mul(i128(w.W), am_n), w.b), "sieve bound");
            PrimeTable T = table_for(need);
            value = moment(psi, w, am_n, am_rho, am_grid, &T, am_exact);
        } else {
            value = moment(psi, w, am_n, am_rho, am_grid, nullptr, am_exact);
        }
        std::cout << json{{"value", sig12(value)}, {"rho", sig12(am_rho)}, {"grid", am_grid}}.dump()
                  << "\n";
        return 0;
    }

    if (*verify_cmd) {
        IntPolynomial psi = parse_psi(vv_psi);
        ParsedPhase ph = parse_phase(vv_alpha);
        i64 V = narrow_i64(checked_add(checked_mul(i128(vv_w), vv_n), vv_b), "sieve bound");
        PrimeTable T = table_for(V);
        MinorArcReport rep = verify_minor_arc(psi, vv_b, vv_w, ph.phase, vv_n, T, vv_scheme_b);
        std::cout << json{{"direct", {{"re", sig12(rep.direct.real())}, {"im", sig12(rep.direct.imag())}}},
                          {"reconstructed",
                           {{"re", sig12(rep.reconstructed.real())}, {"im", sig12(rep.reconstructed.imag())}}},
                          {"residual", sig12(rep.residual)},
                          {"ratio_to_n", sig12(rep.ratio_to_n)},
                          {"minor", rep.minor},
                          {"V", rep.V},
                          {"X", rep.X}}
                         .dump()
                  << "\n";
        return 0;
    }

    if (*transfer) {
        IntPolynomial psi = parse_psi(tr_psi);
        PrimeTable T = table_for(4 * tr_n);
        std::vector<i64> P;
        T.for_each_prime(2, tr_n, [&](i64 p) { P.push_back(p); });
        WTrickResult res = w_trick(P, tr_n, psi, tr_delta, T, tr_w);
        std::vector<i64> R = large_spectrum(res.a, tr_eta);
        std::vector<i64> B = bohr_set(R, tr_eps, res.N);
        Signal ap = smooth(res.a, B);
        LinftyReport lin = linfty_check(ap);
        double rc = restriction_constant(res.a, tr_rho);
        if (!tr_csv.empty()) {
            FILE* f = std::fopen(tr_csv.c_str(), "w");
            if (!f) throw std::domain_error("cannot write " + tr_csv);
            std::fprintf(f, "index,re,im\n");
            for (i64 i = 0; i < res.N; ++i)
                std::fprintf(f, "%lld,%.12g,%.12g\n", (long long)i, res.a.values[size_t(i)].real(),
                             res.a.values[size_t(i)].imag());
            std::fclose(f);
        }
        std::cout << json{{"W", res.W},
                          {"t", res.t},
                          {"modulus", res.D},
                          {"b", res.b},
                          {"N", res.N},
                          {"mass", sig12(res.mass)},
                          {"mass_threshold", sig12(res.threshold)},
                          {"mass_ok", res.mass_ok},
                          {"spectrum_size", i64(R.size())},
                          {"bohr_size", i64(B.size())},
                          {"linfty", sig12(lin.max_abs)},
                          {"linfty_pass", lin.pass},
                          {"restriction_2_5", sig12(rc)}}
                         .dump()
                  << "\n";
        return 0;
    }

    if (*count_cmd) {
        i64 n = 0;
        std::vector<i64> A = parse_set(wc_set, &n);
        IntPolynomial psi = parse_psi(wc_psi);
        i64 M = A.empty() ? 0 : inverse_max(psi, n - 1);
        PrimeTable T = table_for(std::max<i64>(4, narrow_i64(checked_add(checked_mul(i128(wc_w), M), 1), "sieve bound")));
        json out = {{"psi", psi.text()}, {"w", wc_w}, {"n", n}, {"set_size", i64(A.size())}};
        if (wc_method == "both" || wc_method == "brute") {
            WitnessReport r = count_witnesses(A, psi, wc_w, T, CountMethod::BruteForce, wc_cap);
            out["count_brute"] = i64(r.count);
            out["samples"] = triples_json(r.samples);
        }
        if (wc_method == "both" || wc_method == "fft") {
            WitnessReport r = count_witnesses(A, psi, wc_w, T, CountMethod::FFT, wc_cap);
            out["count_fft"] = i64(r.count);
            if (!out.contains("samples")) out["samples"] = triples_json(r.samples);
        }
        if (wc_method == "both")
            out["equal"] = out["count_brute"].get<i64>() == out["count_fft"].get<i64>();
        else if (wc_method != "brute" && wc_method != "fft")
            throw std::domain_error("unknown method: " + wc_method);
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*find_cmd) {
        i64 n = 0;
        std::vector<i64> A = parse_set(wf_set, &n);
        IntPolynomial psi = parse_psi(wf_psi);
        i64 M = A.empty() ? 0 : inverse_max(psi, n - 1);
        PrimeTable T = table_for(std::max<i64>(4, narrow_i64(checked_add(checked_mul(i128(wf_w), M), 1), "sieve bound")));
        IncrementTrace tr = find_witnesses(A, n, psi, wf_w, T);
        json steps = json::array();
        for (const IncrementStep& s : tr.steps)
            steps.push_back({{"q", s.q},
                             {"b", s.b},
                             {"m", s.m},
                             {"delta_before", sig12(s.delta_before)},
                             {"delta_after", sig12(s.delta_after)}});
        std::cout << json{{"steps", steps},
                          {"terminal",
                           {{"count", i64(tr.terminal.count)},
                            {"method", count_method_name(tr.terminal.method)},
                            {"samples", triples_json(tr.terminal.samples)}}},
                          {"exhausted", tr.exhausted},
                          {"fallback", tr.used_fallback},
                          {"verified_samples", tr.verified_samples}}
                         .dump()
                  << "\n";
        return 0;
    }

    if (*decay_cmd) {
        IntPolynomial psi = parse_psi(sd_psi);
        ParsedPhase ph = parse_phase(sd_alpha);
        std::vector<i64> sizes;
        std::stringstream ss(sd_sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoll(tok));
        if (sizes.empty()) throw std::domain_error("empty size grid");
        i64 maxN = *std::max_element(sizes.begin(), sizes.end());
        PrimeTable T = table_for(narrow_i64(checked_add(checked_mul(i128(sd_w), maxN), sd_b), "sieve bound"));
        std::printf("N,abs,ratio\n");
        for (i64 N : sizes) {
            cd s = weyl_sum(psi, ph.phase, N, Weight::prime(sd_b, sd_w), &T);
            std::printf("%lld,%.12g,%.12g\n", (long long)N, std::abs(s), std::abs(s) / double(N));
        }
        return 0;
    }

    if (*gauss_cmd) {
        if (sg_qmax < 3) throw std::domain_error("empty grid");
        PrimeTable T = PrimeTable::build(sg_qmax);
        IntPolynomial sq({1, 0});  // x^2
        std::mt19937_64 rng(sg_seed);
        std::printf("q,max_ratio,min_ratio\n");
        std::vector<i64> qs;
        T.for_each_prime(3, sg_qmax, [&](i64 q) { qs.push_back(q); });
        for (i64 q : qs) {
            std::vector<i64> as = {1, 2, 3, q - 1};
            for (i64 i = 0; i < sg_samples; ++i) as.push_back(1 + i64(rng() % u64(q - 1)));
            double lo = 1e300, hi = 0;
            for (i64 a : as) {
                double r = std::abs(complete_sum(sq, a % q == 0 ? 1 : a % q, q)) / std::sqrt(double(q));
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            std::printf("%lld,%.12g,%.12g\n", (long long)q, hi, lo);
        }
        return 0;
    }

    return 0;
}

}  // namespace
