#include "weylab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "weylab/arcs.hpp"

namespace weylab {

namespace {

// terms of "c x^e" form; returns coefficient-by-exponent map as a vector
std::vector<i64> parse_terms(const std::string& text, bool allow_constant) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(unsigned(ch))) s += ch;
    if (s.empty()) throw std::domain_error("empty polynomial text");
    if (s.front() == '*' || s.back() == '*') throw std::domain_error("bad polynomial text");

    std::vector<std::pair<i64, i64>> terms;  // (exponent, coefficient)
    size_t i = 0;
    char var = 0;
    while (i < s.size()) {
        i64 sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i >= s.size()) throw std::domain_error("dangling sign in polynomial text");
        i64 coeff = 1;
        bool saw_digits = false;
        if (std::isdigit(unsigned(s[i]))) {
            saw_digits = true;
            coeff = 0;
            while (i < s.size() && std::isdigit(unsigned(s[i]))) {
                coeff = narrow_i64(checked_add(checked_mul(i128(coeff), 10), s[i] - '0'),
                                   "coefficient too large");
                ++i;
            }
        }
        if (i < s.size() && s[i] == '*') ++i;
        i64 expo = 0;
        if (i < s.size() && std::isalpha(unsigned(s[i]))) {
            if (var == 0) var = s[i];
            if (s[i] != var) throw std::domain_error("mixed variable letters");
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(unsigned(s[i])))
                    throw std::domain_error("bad exponent");
                expo = 0;
                while (i < s.size() && std::isdigit(unsigned(s[i]))) {
                    expo = expo * 10 + (s[i] - '0');
                    if (expo > 62) throw std::domain_error("exponent too large");
                    ++i;
                }
            }
        } else if (!saw_digits) {
            throw std::domain_error("expected a term in polynomial text");
        }
        terms.emplace_back(expo, sign * coeff);
    }

    i64 maxe = 0;
    for (auto& [e, c] : terms) maxe = std::max(maxe, e);
    if (!allow_constant && maxe == 0) throw std::domain_error("polynomial needs a variable term");
    std::vector<i64> coeffs(size_t(maxe + 1), 0);
    for (auto& [e, c] : terms) {
        i64& slot = coeffs[size_t(maxe - e)];
        i128 sum = checked_add(i128(slot), c);
        slot = narrow_i64(sum, "coefficient overflow");
    }
    return coeffs;
}

}  // namespace

IntPolynomial parse_psi(const std::string& text) {
    std::vector<i64> coeffs = parse_terms(text, false);
    // parse_terms includes the exponent-0 slot; these polynomials carry an
    // implied zero constant term
    if (coeffs.back() != 0) throw std::domain_error("polynomial needs a zero constant term");
    coeffs.pop_back();
    return IntPolynomial(coeffs);
}

GenPolynomial parse_gen_poly(const std::string& text) {
    return GenPolynomial(parse_terms(text, true));
}

ParsedPhase parse_phase(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(unsigned(ch))) s += ch;
    if (s.empty()) throw std::domain_error("empty phase text");
    ParsedPhase out;
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        size_t tail = s.find_first_of("+-", slash);
        i64 a = std::stoll(s.substr(0, slash));
        i64 q = std::stoll(s.substr(slash + 1, tail == std::string::npos ? std::string::npos
                                                                         : tail - slash - 1));
        double theta = tail == std::string::npos ? 0.0 : std::stod(s.substr(tail));
        out.phase = Phase(a, q, theta);
        return out;
    }
    double alpha = std::stod(s);
    out.phase = Phase::from_real(alpha, 1'000'000);
    out.approximated = true;
    return out;
}

Weight parse_weight(const std::string& text) {
    if (text == "unit") return Weight::unit();
    auto bw = [&](const std::string& body) {
        size_t comma = body.find(',');
        if (comma == std::string::npos) throw std::domain_error("weight spec needs b,W");
        return std::pair<i64, i64>{std::stoll(body.substr(0, comma)),
                                   std::stoll(body.substr(comma + 1))};
    };
    if (text.rfind("poly:", 0) == 0) return Weight::poly(parse_gen_poly(text.substr(5)));
    if (text.rfind("prime:", 0) == 0) {
        auto [b, W] = bw(text.substr(6));
        return Weight::prime(b, W);
    }
    if (text.rfind("deltaprime:", 0) == 0) {
        auto [b, W] = bw(text.substr(11));
        return Weight::delta_prime(b, W);
    }
    throw std::domain_error("unknown weight spec: " + text);
}

std::vector<i64> uniform_set(i64 n, double delta, u64 seed) {
    if (n < 1 || !(delta >= 0.0 && delta <= 1.0))
        throw std::domain_error("uniform_set requires n >= 1, delta in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<i64> A;
    for (i64 x = 1; x <= n; ++x)
        if (double(rng() >> 11) * 0x1.0p-53 < delta) A.push_back(x);
    return A;
}

std::vector<i64> parse_set(const std::string& spec, i64* n_out) {
    if (spec.rfind("uniform:", 0) == 0) {
        i64 n = -1;
        double delta = -1;
        u64 seed = 0;
        std::stringstream ss(spec.substr(8));
        std::string kv;
        while (std::getline(ss, kv, ',')) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) throw std::domain_error("bad uniform spec field: " + kv);
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "n")
                n = std::stoll(val);
            else if (key == "delta")
                delta = std::stod(val);
            else if (key == "seed")
                seed = std::stoull(val);
            else
                throw std::domain_error("unknown uniform spec key: " + key);
        }
        if (n < 1 || delta < 0) throw std::domain_error("uniform spec needs n= and delta=");
        if (n_out) *n_out = n;
        return uniform_set(n, delta, seed);
    }
    std::ifstream in(spec);
    if (!in) throw std::domain_error("cannot open set file: " + spec);
    std::vector<i64> A;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        i64 v;
        while (ls >> v) A.push_back(v);
    }
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    if (n_out) *n_out = A.empty() ? 0 : A.back();
    return A;
}

}  // namespace weylab
