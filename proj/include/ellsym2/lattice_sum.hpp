// lattice_sum.hpp
//
// Restricted Epstein-type sums  sum' w(m,n) mask(m,n) / (m^2 + c n^2)^s
// over expanding squares max(|m|,|n|) <= radius, with a certified
// integral-comparison tail bound.  The inner loop runs in machine words;
// shells are compensated independently and merged in shell order, so results
// are bit-identical across reruns and thread counts.

#pragma once

#include <vector>

#include "ellsym2/precision.hpp"
#include "ellsym2/report.hpp"

namespace ellsym2::lattice {

enum class Weight { One, MSq, NSq, MSqMinusNSq, MSqMinus4NSq };
enum class Mask { All, MEven, NEven, BothEven, MOdd, AltM, AltN, AltMMinusAltN };

struct LatticeSumSpec {
    Weight weight = Weight::One;
    Mask mask = Mask::All;
    int form_c = 1;    // quadratic form m^2 + c n^2, c in {1, 4}
    double s = 2.0;    // exponent of the form
    long radius = 2000;

    int weight_degree() const { return weight == Weight::One ? 0 : 2; }
    // absolute convergence: 2s - deg(w) > 2
    void validate() const;
};

struct SumResult {
    Real value;
    Real tail_bound;
};

SumResult evaluate(const LatticeSumSpec& spec, const PrecisionContext& ctx, int threads = 0);

// The two parity-rearrangement identities used midway through the lattice
// evaluation of the main determinant; one report per identity.
std::vector<VerificationReport> verify_e1_e2(const PrecisionContext& ctx, long radius = 2000,
                                             int threads = 0);

// Both lattice representations of L(chi_-4, t) against dirichlet_beta(t).
std::vector<VerificationReport> prop32_check(int t, const PrecisionContext& ctx,
                                             long radius = 2000, int threads = 0);

} // namespace ellsym2::lattice
