#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddgon/serialize.hpp"

namespace oddgon {

enum class Precision { Double, Extended };

// Reads ODDGON_PRECISION; "extended" selects the 100-digit oracle.
Precision precision_from_env();

// 2 cot(pi/n) from the selected oracle.
double modulus_reference(int n, Precision precision);

struct IdentityReport {
    int samples = 0;
    double max_residual = 0.0;
    double worst_theta = 0.0;
    int worst_k = 0;
};

// Both trig identities on `samples` seeded draws of theta in (0.01, pi - 0.01)
// and k in 1..12.
IdentityReport check_identities(int samples, std::uint64_t seed);

struct ModuliReport {
    int n = 0;
    int cylinders = 0;
    double max_dev = 0.0;      // against 2 cot(pi/n)
    double max_spread = 0.0;   // between cylinders
};
ModuliReport check_moduli(int n, Precision precision);

// Reassembly residuals against the matrix oracle; with extended precision the
// oracle applies M_n to side points evaluated in 100-digit arithmetic.
ReassemblyReport check_reassembly(int n, double tol, Precision precision);

struct AgreementReport {
    int n = 0;
    int samples = 0;
    int crossings = 0;
    int mismatches = 0;
    int corner_retries = 0;
    std::optional<std::string> counterexample;
};

// Random sector trajectories (edge start, theta in (0, pi/n)); compares the
// geometric derivation with ksl on window interiors. Sample i draws from its
// own generator seeded with (seed, i), and samples run concurrently.
AgreementReport check_geometric_agreement(const Surface& surface, int samples, int crossings, std::uint64_t seed);

struct TorusReport {
    bool abbb_ok = false;
    std::string abbb_derived;
    int samples = 0;
    int mismatches = 0;
    std::string ksl_abbb;
    bool negative_control_ok = false;
};
TorusReport check_torus(int samples, std::uint64_t seed);

struct VerifyConfig {
    int n = 5;
    double tol = 1e-9;
    std::vector<std::string> checks; // empty: all
    std::uint64_t seed = 42;
    int samples = 200;
    int crossings = 80;
    std::uint64_t random_walks = 10000;
    int length_bound = 10;
    Precision precision = Precision::Double;
};

const std::vector<std::string>& known_checks();

// Runs the selected checks concurrently and assembles the report. `pass` in
// the returned object is the conjunction of every check's `pass`.
Json run_verification(const VerifyConfig& config);

} // namespace oddgon
