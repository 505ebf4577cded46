#pragma once

#include "demchar/charring.hpp"
#include "demchar/demazure.hpp"
#include "demchar/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace demchar {

/// Outcome of comparing two characters that are claimed to be equal.
struct VerificationReport
{
	std::string check; // "theorem" or "lemma31"
	ElementId tau = 0;
	Word tau_word;
	Weight lambda;
	CharElement lhs;
	CharElement rhs;
	CharElement difference; // lhs - rhs
	bool passed = false;
	Integer dim_lhs;
	Integer dim_rhs;
	std::size_t interval_size = 0;
	std::optional<std::map<ElementId, CharElement>> per_w_terms;
};

struct VerifyOptions
{
	/// Precomputed top cohomology characters for the same lambda; computed on
	/// demand per element when absent.
	const TopCohomologyTable *table = nullptr;
	bool keep_terms = false;
};

/// sum over w <= tau of the dual top cohomology characters h^{l(w)}(w, -lambda)^*.
CharElement theorem_lhs(const WeylGroup &g, ElementId tau, const Weight &lambda,
                        const TopCohomologyTable *table = nullptr);

/// e^rho * h^0(tau, lambda - rho).
CharElement theorem_rhs(const WeylGroup &g, ElementId tau, const Weight &lambda);

VerificationReport verify_theorem(const WeylGroup &g, ElementId tau, const Weight &lambda,
                                  const VerifyOptions &options = {});

/// Character of the kernel of restriction to the boundary divisor, obtained
/// from e^rho * eps_w = h^{l(w)}(w, -lambda)^*.
CharElement epsilon_char(const WeylGroup &g, ElementId w, const Weight &lambda);
CharElement epsilon_from_top(const RootDatum &d, const CharElement &top);

/// sum over w <= tau of eps_w against h^0(tau, lambda - rho).
VerificationReport verify_lemma31(const WeylGroup &g, ElementId tau, const Weight &lambda,
                                  const VerifyOptions &options = {});

/// Serre-duality twist psi_w = rho + w(rho) - w(chi'_w), where
/// L_{-2 rho + chi'_w} is the canonical bundle of a Gorenstein X(w). The
/// caller supplies chi'_w.
Weight psi_character(const WeylGroup &g, ElementId w, const Weight &chi_prime);

/// chi' for the identity (a point): 2 rho.
Weight chi_prime_identity(const RootDatum &d);
/// chi' for w0 (the full flag variety, canonical bundle L_{-2 rho}): 0.
Weight chi_prime_longest(const RootDatum &d);

/// All weights with every coordinate in [1, bound], lexicographic order.
std::vector<Weight> regular_dominant_grid(std::size_t rank, Coord bound);

} // namespace demchar
