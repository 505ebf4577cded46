#include "demchar/theorem.hpp"

#include "demchar/errors.hpp"

namespace demchar {

namespace {

const CharElement &top_char(const WeylGroup &g, ElementId w, const Weight &lambda, const TopCohomologyTable *table,
                            CharElement &scratch)
{
	if (table)
		return (*table)[w];
	scratch = top_cohomology_char(g, w, lambda);
	return scratch;
}

void check_table(const TopCohomologyTable *table, const WeylGroup &g, const Weight &lambda)
{
	if (table && (table->lambda() != lambda || table->size() != g.size()))
		throw InputError("top cohomology table was built for a different weight or group");
}

VerificationReport finish(std::string check, const WeylGroup &g, ElementId tau, const Weight &lambda,
                          CharElement lhs, CharElement rhs, std::size_t interval_size)
{
	VerificationReport r;
	r.check = std::move(check);
	r.tau = tau;
	r.tau_word = g.word(tau);
	r.lambda = lambda;
	r.difference = lhs - rhs;
	r.passed = r.difference.is_zero();
	r.dim_lhs = lhs.dimension();
	r.dim_rhs = rhs.dimension();
	r.lhs = std::move(lhs);
	r.rhs = std::move(rhs);
	r.interval_size = interval_size;
	return r;
}

} // namespace

CharElement theorem_lhs(const WeylGroup &g, ElementId tau, const Weight &lambda, const TopCohomologyTable *table)
{
	check_table(table, g, lambda);
	CharElement sum(g.rank());
	CharElement scratch;
	for (ElementId w : g.lower_interval(tau))
		sum += star(top_char(g, w, lambda, table, scratch));
	return sum;
}

CharElement theorem_rhs(const WeylGroup &g, ElementId tau, const Weight &lambda)
{
	if (!is_regular_dominant(lambda))
		throw InputError("lambda must be regular dominant, got " + lambda.str());
	const Weight &rho = g.datum().rho();
	return demazure_char(g, tau, lambda - rho).shifted(rho);
}

VerificationReport verify_theorem(const WeylGroup &g, ElementId tau, const Weight &lambda,
                                  const VerifyOptions &options)
{
	check_table(options.table, g, lambda);
	const auto interval = g.lower_interval(tau);
	CharElement lhs(g.rank());
	std::map<ElementId, CharElement> terms;
	CharElement scratch;
	for (ElementId w : interval)
	{
		CharElement term = star(top_char(g, w, lambda, options.table, scratch));
		lhs += term;
		if (options.keep_terms)
			terms.emplace(w, std::move(term));
	}
	auto report = finish("theorem", g, tau, lambda, std::move(lhs), theorem_rhs(g, tau, lambda), interval.size());
	if (options.keep_terms)
		report.per_w_terms = std::move(terms);
	return report;
}

CharElement epsilon_from_top(const RootDatum &d, const CharElement &top)
{
	return star(top).shifted(-d.rho());
}

CharElement epsilon_char(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	return epsilon_from_top(g.datum(), top_cohomology_char(g, w, lambda));
}

VerificationReport verify_lemma31(const WeylGroup &g, ElementId tau, const Weight &lambda,
                                  const VerifyOptions &options)
{
	check_table(options.table, g, lambda);
	const auto interval = g.lower_interval(tau);
	CharElement lhs(g.rank());
	std::map<ElementId, CharElement> terms;
	CharElement scratch;
	for (ElementId w : interval)
	{
		CharElement eps = epsilon_from_top(g.datum(), top_char(g, w, lambda, options.table, scratch));
		lhs += eps;
		if (options.keep_terms)
			terms.emplace(w, std::move(eps));
	}
	CharElement rhs = demazure_char(g, tau, lambda - g.datum().rho());
	auto report = finish("lemma31", g, tau, lambda, std::move(lhs), std::move(rhs), interval.size());
	if (options.keep_terms)
		report.per_w_terms = std::move(terms);
	return report;
}

Weight psi_character(const WeylGroup &g, ElementId w, const Weight &chi_prime)
{
	const Weight &rho = g.datum().rho();
	return rho + apply(g, w, rho) - apply(g, w, chi_prime);
}

Weight chi_prime_identity(const RootDatum &d)
{
	return 2 * d.rho();
}

Weight chi_prime_longest(const RootDatum &d)
{
	return Weight(d.rank());
}

std::vector<Weight> regular_dominant_grid(std::size_t rank, Coord bound)
{
	std::vector<Weight> out;
	if (bound < 1 || rank == 0)
		return out;
	Weight cur(rank);
	for (std::size_t i = 0; i < rank; ++i)
		cur[i] = 1;
	while (true)
	{
		out.push_back(cur);
		std::size_t k = rank;
		while (k > 0 && cur[k - 1] == bound)
		{
			cur[k - 1] = 1;
			--k;
		}
		if (k == 0)
			break;
		++cur[k - 1];
	}
	return out;
}

} // namespace demchar
