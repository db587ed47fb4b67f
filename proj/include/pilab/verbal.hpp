#ifndef PILAB_VERBAL_HPP
#define PILAB_VERBAL_HPP

#include "pilab/report.hpp"
#include "pilab/subspace.hpp"

namespace pilab {

/// How the span of all f-values is computed.
///  - BasisTuples: basis arguments only; exact for multilinear f.
///  - Enumerate: all |A|^n argument tuples; exact over finite fields.
///  - Polarize: homogeneous decomposition plus full multilinearization;
///    exact in characteristic 0, a certified lower bound over finite fields.
enum class Strategy { BasisTuples, Enumerate, Polarize };

std::string strategy_name(Strategy s);

/// Default tuple cap, overridable via the PILAB_ENUM_CAP environment variable.
std::uint64_t default_enum_cap();

struct StrategyOpts {
    Strategy strategy = Strategy::BasisTuples;
    std::uint64_t enum_cap = default_enum_cap();
};

struct SpanResult {
    Subspace space;
    bool exact;  // false: certified lower bound only
};

/// Picks the cheapest exact strategy: BasisTuples for multilinear f,
/// Enumerate over finite fields, Polarize in characteristic zero.
Strategy auto_strategy(const FreePoly& f, const AlgebraPtr& A);

/// The field-size guard of the Lie/sharp-bound theorems:
/// |K| >= m+1, or f homogeneous and |K| >= m (multilinear implies both).
bool lie_guard_holds(const FreePoly& f);

/// g(x_1..x_{n+1}) = [f, x_{n+1}] on the next unused indeterminate.
FreePoly bound_commutator(const FreePoly& f);

/// Verbal subspace S_A(f): span of all f-values.
SpanResult verbal_subspace(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);
/// Verbal subalgebra A_A(f): subalgebra closure of the span.
SpanResult verbal_subalgebra(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);
/// Verbal ideal I_A(f): ideal closure of the span.
SpanResult verbal_ideal(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);

/// Exact strategies answer directly; a lower-bound strategy can certify a
/// negative answer only and throws InconclusiveError otherwise.
bool is_pi(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);

struct PiWitnessResult {
    FreePoly witness;        // s_{t+1} over t+1 disjoint-variable copies of f
    std::size_t verbal_dim;  // t
};
/// Builds the identity forced by dim S_A(f) = t and certifies it vanishes on
/// A; a certification failure is a hard error.
PiWitnessResult pi_witness(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);

/// Computes t = dim S_A(g) for g = [f, x_{n+1}] together with the ideal and
/// subalgebra dimension bounds, and checks each applicable inequality.
CheckReport concision_bounds(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts);

/// Checks the homogeneous-decomposition equalities for S, I and the
/// unital-hull product identity for the subalgebra; requires |K| >= m+1.
CheckReport decomposition_check(const FreePoly& f, const AlgebraPtr& A);

/// Checks A_A(f) inside S_A(f) + I_A([f, x_{n+1}]) for multilinear f.
CheckReport corollary_inclusion(const FreePoly& f, const AlgebraPtr& A);

}  // namespace pilab

#endif
