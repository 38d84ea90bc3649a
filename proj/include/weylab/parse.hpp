#pragma once
#include <string>
#include <vector>

#include "weylab/expsum.hpp"
#include "weylab/polycore.hpp"

namespace weylab {

// Polynomial text: terms like "2x^3", "-x", "z^2", "+ 7z" joined by +/-;
// variable letter is free (one letter per polynomial). "x^2" -> {1,0,0} high
// first.
IntPolynomial parse_psi(const std::string& text);
// Same grammar, constant terms allowed.
GenPolynomial parse_gen_poly(const std::string& text);

struct ParsedPhase {
    Phase phase;
    bool approximated = false;  // decimal input, rationalized via dirichlet_approx
    ParsedPhase() : phase(1, 1) {}
};

// "a/q", "a/q+theta", "a/q-theta", or a bare decimal (approximated with
// denominator cap 10^6).
ParsedPhase parse_phase(const std::string& text);

// Weight spec: "unit", "poly:<polynomial>", "prime:b,W", "deltaprime:b,W".
Weight parse_weight(const std::string& text);

// Set spec: "uniform:n=...,delta=...,seed=..." or a file of one integer per
// line ('#' comments allowed). n_out receives the ambient n (the generator's
// n, or max element for files).
std::vector<i64> parse_set(const std::string& spec, i64* n_out = nullptr);

// The uniform generator behind "uniform:" specs: x in [1, n] kept when the
// x-th draw of a 64-bit Mersenne Twister (seeded with seed), scaled to [0,1),
// falls below delta. Identical output on every platform.
std::vector<i64> uniform_set(i64 n, double delta, u64 seed);

}  // namespace weylab
