#pragma once

#include "ptq/hamiltonian_model.hpp"
#include "ptq/operator_poly.hpp"
#include "ptq/potential.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ptq::metric {

using weyl::GaussianRational;

/// Span for Hermitian solutions of commutator equations: sums of
/// anticommutators {f_n(x), p^n} with n odd up to max_p_degree and
/// real-polynomial f_n of degree up to max_x_degree.
struct AnsatzSpec {
  int max_p_degree = 1;  // odd, >= 1
  int max_x_degree = 2;
};

struct CommutatorSolution {
  OperatorPoly solution;     // Hermitian; [solution, H0] == rhs exactly
  int kernel_dimension = 0;  // > 0 when the system is underdetermined
};

/// Solves [X, H0] = rhs for Hermitian X in the ansatz span by assembling the
/// linear system over monomial coefficients and solving it in exact rational
/// arithmetic. The returned X is re-verified by substitution. When the
/// kernel is nontrivial the minimal-degree representative (free coefficients
/// set to zero, low-degree basis elements preferred) is returned together
/// with the kernel dimension.
///
/// Throws NoSolutionInAnsatz when the system is inconsistent at the given
/// bounds, and std::invalid_argument when rhs is not anti-Hermitian (no
/// Hermitian solution can exist).
CommutatorSolution solve_commutator_equation(const OperatorPoly& H0, const OperatorPoly& rhs,
                                             const AnsatzSpec& ansatz);

/// One verified identity in a derivation or verification report.
struct IdentityCheck {
  std::string id;         // stable machine key, e.g. "q1_closed_form"
  std::string statement;  // human-readable formula
  bool pass = false;
  std::string detail;     // e.g. series termination order or a mismatch dump
};

/// Result of solving the commutator hierarchy for the metric exponent Q and
/// conjugating to the equivalent Hermitian Hamiltonian h.
struct MetricSolution {
  std::vector<std::pair<int, OperatorPoly>> q_terms;  // (odd order r, Q_r)
  int truncated_at = 0;   // highest order with Q_r != 0
  OperatorPoly q_total;   // sum of all Q_r (bookkeeping parameter set to 1)
  OperatorPoly h;         // exp(-Q/2) H exp(Q/2), exact
  OperatorPoly h_fourier; // fourier_map(h), unscaled
  std::vector<IdentityCheck> diagnostics;
};

struct DeriveOptions {
  int ansatz_p_degree_cap = 9;  // growth schedule stops here
  int bch_max_terms = 24;
};

/// Solves the hierarchy [Q_1, H0] = 2 H1, [Q_3, H0] = (1/6)[Q_1,[Q_1,H1]], ...
/// order by order up to max_order (odd). Right-hand sides are generated
/// generically from the lower-order Q_r by expanding exp(-Q) H exp(Q) - H†
/// in powers of the bookkeeping parameter; exact vanishing is detected and
/// recorded. Every returned Q_r satisfies its equation under exact
/// re-substitution, Q† = Q and h† = h.
MetricSolution derive_metric(const HamiltonianModel& model, int max_order = 5,
                             const DeriveOptions& opts = {});

struct BchResult {
  OperatorPoly value;
  int last_nonzero_order = 0;  // n of the last contributing series term
  bool terminated = false;     // nested commutator vanished exactly
};

/// Evaluates exp(-s Q) H exp(s Q) = sum_n (-s)^n/n! ad_Q^n(H) with exact
/// coefficients. If a nested commutator vanishes the series terminates and
/// the result is certified exact; otherwise TruncatedSeries is thrown after
/// max_terms.
BchResult bch_conjugate(const OperatorPoly& H, const OperatorPoly& Q, const Rational& s,
                        int max_terms = 24);

enum class Verdict { equal, not_equal, inconclusive };

struct PseudoHermiticityReport {
  Verdict verdict = Verdict::inconclusive;
  int series_terminated_at = -1;  // order of the last nonzero series term
  OperatorPoly conjugated;        // exp(-Q) H exp(Q)
  OperatorPoly target;            // adjoint(H)
};

/// Checks exp(-Q) H exp(Q) == H† by exact series evaluation. A
/// non-terminating series yields an inconclusive verdict.
PseudoHermiticityReport verify_pseudo_hermitian(const HamiltonianModel& model,
                                                const OperatorPoly& Q, int max_terms = 24);

struct EquivalentHermitian {
  OperatorPoly h;          // exact, in the original variables
  OperatorPoly h_fourier;  // exact image under x -> -p, p -> x
  spectra::PotentialSpec h_scaled;  // p^2 + V(y) after the canonical sqrt(alpha) rescale
};

/// Full pipeline: derive Q, conjugate to h, Fourier-map, and rescale
/// y -> y/sqrt(alpha), p -> sqrt(alpha) p numerically into a standard
/// kinetic-plus-potential form (exact when alpha is a perfect square).
EquivalentHermitian equivalent_hermitian(const HamiltonianModel& model);

/// End-to-end verification report for a model: hierarchy solutions, closed
/// forms, truncation, Hermiticity, pseudo-Hermiticity and the h template.
struct VerificationReport {
  Rational g;
  Rational m2;
  std::vector<IdentityCheck> checks;
  bool all_passed = false;
};

VerificationReport verify_construction(const HamiltonianModel& model, int max_order = 5);

}  // namespace ptq::metric
