#pragma once

#include "minkarr/geometry.hpp"

namespace minkarr::certify {

// Domain threshold sqrt(3) - 1 for the shell certification strip.
inline constexpr double mu_star = 0.73205080756887729352744634150587237;

struct FG {
    double f = 0.0;
    double g = 0.0;
};

// f(rho, mu) = arccos(A)/2 + rho^2 arccos(B)/2 with c = 1 + mu rho,
// A = (1 + c^2 - rho^2)/(2c), B = (rho^2 + c^2 - 1)/(2 rho c);
// g(rho, mu) = rho sqrt((2 + rho + mu rho)(2 - rho + mu rho)(1 - mu^2)).
// Domain: rho in (0, 1], mu in [0, sqrt(3)-1]; throws std::domain_error
// outside, std::runtime_error if an arccos argument leaves [-1, 1] by more
// than 1e-12 (arguments within 1e-12 of the boundary are clamped).
FG shell_fg(double rho, double mu);

double f_partial_rho(double rho, double mu);  // closed form
double g_partial_rho(double rho, double mu);  // closed form

// h = d/d rho (f) * Delta - d/d rho (Delta) * f with Delta = g/4, the
// triangle-area normalization of g under which the Lipschitz constants of
// certify_h_positive are valid.  Positivity of h is equivalent to strict
// monotonicity of f/g in rho.
double shell_h(double rho, double mu);

struct CertificationGrid {
    double rho_min = 0.2, rho_max = 1.0;
    double mu_min = 0.0, mu_max = mu_star;
    int n_rho = 0, n_mu = 0;
    double grid_min = 0.0;
    double argmin_rho = 0.0, argmin_mu = 0.0;
    double lipschitz_rho = 4.78;  // bound on |dh/d rho| over the strip
    double lipschitz_mu = 28.49;  // bound on |dh/d mu| over the strip
    double rounding_slack = 1e-9;
    double global_lower_bound = 0.0;  // grid_min - L_rho*d_rho/2 - L_mu*d_mu/2 - slack
    bool verdict = false;             // global_lower_bound > 0
};

// Evaluate h on an n_rho x n_mu grid over [0.2, 1] x [0, sqrt(3)-1]
// (endpoints included) and certify positivity via the Lipschitz bounds.
// Deterministic for any thread count; NaN raises std::runtime_error naming
// the grid point.  threads <= 0 selects the hardware concurrency.
CertificationGrid certify_h_positive(int n_rho = 8691, int n_mu = 8691, int threads = 0);

struct RefinedMin {
    double value = 0.0;
    double rho = 0.0, mu = 0.0;
};

// Local shrinking-grid refinement of the minimum of h near (rho0, mu0),
// clamped to the certification strip.
RefinedMin refine_minimum(double rho0, double mu0, int rounds = 48);

// sigma_shell(mu) - (7 - mu)/(5 + mu), the Case-1 margin of the shell lemma.
double case1_margin(double mu);

// f_{A,B}(gamma) = (alpha A^2 + beta B^2) / Delta for the triangle with side
// lengths A, B enclosing angle gamma, where alpha, beta are the angles at the
// far endpoints of A, B and Delta is the triangle area.  With this pairing
// fab -> 2 as gamma -> pi for every side pair.
double fab(double A, double B, double gamma);

// Strict decrease of fab in gamma over an equispaced sample of (0, pi).
bool fab_monotonicity(double A, double B, int gamma_samples);

struct NocoreProbe {
    double max_nu = 0.0;  // largest nu for which the triple is a nu-arrangement
    bool pairwise_intersecting = false;
    bool covers_center_triangle = false;
};

// Diagnostic probe for the no-core lemma: a triple with max_nu > sqrt(3)-1
// whose closed disks pairwise intersect must leave part of its center
// triangle uncovered.  Throws std::invalid_argument for collinear centers.
NocoreProbe nocore_probe(const geometry::Disk& a, const geometry::Disk& b,
                         const geometry::Disk& c);

}  // namespace minkarr::certify
