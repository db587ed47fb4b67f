#ifndef PILAB_MARGINAL_HPP
#define PILAB_MARGINAL_HPP

#include "pilab/report.hpp"
#include "pilab/subspace.hpp"
#include "pilab/verbal.hpp"

namespace pilab {

/// How the marginal subspace is computed.
///  - Kernel: stacked linear systems over basis tuples; multilinear f, any field.
///  - Enumerate: filter all elements; general f over a finite field within cap.
enum class MarginalMethod { Kernel, Enumerate };

std::string method_name(MarginalMethod m);
MarginalMethod auto_marginal_method(const FreePoly& f, const AlgebraPtr& A);

/// Whether z eradicates f in A: perturbing any argument slot by a multiple of
/// z never changes the value of f.
bool is_eradicator(const Element& z, const FreePoly& f, MarginalMethod method,
                   std::uint64_t cap = default_enum_cap());

/// The marginal subspace of all eradicators. The Enumerate path certifies
/// that the eradicator set is closed under addition and scaling and raises a
/// hard error otherwise.
Subspace marginal_subspace(const FreePoly& f, const AlgebraPtr& A, MarginalMethod method,
                           std::uint64_t cap = default_enum_cap());

struct MarginalResult {
    Subspace s_hat;   // all eradicators
    Subspace i_hat;   // largest ideal inside
    Subspace a_core;  // subalgebra fixpoint inside
    MarginalMethod method;
    bool addition_certified;  // Enumerate path checked set closure explicitly
};

/// Marginal subspace together with its largest inner ideal and subalgebra
/// core. For f = [x1,x2] the ideal is cross-checked against
/// centre(A) intersected with ann[A,A]; a mismatch is a hard error.
MarginalResult marginal_all(const FreePoly& f, const AlgebraPtr& A, MarginalMethod method,
                            std::uint64_t cap = default_enum_cap());

/// ann^0 = 0, ann^{k+1}/ann^k = two-sided annihilator of A/ann^k.
Subspace ann_tower(const AlgebraPtr& A, unsigned n);

enum class LieSeries { Upper, Lower };
/// Upper: Z_1 = centre, Z_{k+1}/Z_k = Lie centre of A/Z_k.
/// Lower: gamma_1 = A, gamma_{k+1} = [gamma_k, A].
Subspace lie_series(const AlgebraPtr& A, LieSeries kind, unsigned n);

struct PerfectMode {
    bool exhaustive = true;
    unsigned samples = 200;  // sampled mode only
};
/// Closure check z1 z2 in S_hat over all pairs (finite fields) or seeded
/// random pairs (characteristic zero).
CheckReport marginal_perfect_check(const FreePoly& f, const AlgebraPtr& A, const PerfectMode& mode,
                                   std::uint64_t seed = 1,
                                   std::uint64_t cap = default_enum_cap());

/// Records (codim S_hat, dim S) for the marginal-vs-verbal comparison.
CheckReport stewart_check(const FreePoly& f, const AlgebraPtr& A,
                          std::uint64_t cap = default_enum_cap());

}  // namespace pilab

#endif
