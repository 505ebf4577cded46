#include "demchar/kernel.hpp"

#include "demchar/demazure.hpp"
#include "demchar/errors.hpp"

#include <algorithm>
#include <vector>

namespace demchar {

bool in_kernel(const RootDatum &d, const CharElement &v)
{
	for (std::size_t i = 0; i < d.rank(); ++i)
		if (!demazure_step(d, i, v).is_zero())
			return false;
	return true;
}

bool is_demazure_invariant(const RootDatum &d, const CharElement &v)
{
	for (std::size_t i = 0; i < d.rank(); ++i)
		if (demazure_step(d, i, v) != v)
			return false;
	return true;
}

CharElement kernel_basis_element(const WeylGroup &g, const Weight &lambda, Execution exec)
{
	const TopCohomologyTable table(g, lambda, exec);
	CharElement sum(g.rank());
	for (ElementId w = 0; w < g.size(); ++w)
		sum += table[w];
	return sum;
}

bool verify_characterization(const WeylGroup &g, const CharElement &v)
{
	const RootDatum &d = g.datum();
	return in_kernel(d, v) == is_demazure_invariant(d, v.shifted(d.rho()));
}

Weight basis_label(const WeylGroup &g, const Weight &mu)
{
	return -apply(g, g.longest(), mu) + g.datum().rho();
}

Weight basis_weight(const WeylGroup &g, const Weight &lambda)
{
	return -apply(g, g.longest(), lambda - g.datum().rho());
}

Decomposition decompose(const WeylGroup &g, const CharElement &v)
{
	const RootDatum &d = g.datum();
	if (v.rank() != d.rank())
		throw InputError("character rank does not match " + d.name());
	if (!in_kernel(d, v))
		throw InputError("element is not in the common kernel of the Demazure operators");

	CharElement u = v.shifted(d.rho());
	for (std::size_t i = 0; i < d.rank(); ++i)
		if (w_apply(g, g.left_multiply(i, g.identity()), u) != u)
			throw ConsistencyError("e^rho v is not invariant under simple reflection " + std::to_string(i + 1) +
			                       " although v lies in the kernel");

	Decomposition out;
	const std::size_t max_rounds = u.size();
	std::size_t rounds = 0;
	while (!u.is_zero())
	{
		if (++rounds > max_rounds)
			throw ConsistencyError("decomposition did not terminate within the support size");

		// Every dominance-maximal support weight of a W-invariant element is
		// dominant, and any weight above a dominant support weight has a
		// dominant conjugate above it, so comparing dominant weights suffices.
		std::vector<Weight> dominant;
		for (const auto &[mu, c] : u.terms())
			if (is_dominant(mu))
				dominant.push_back(mu);
		std::vector<Weight> maximal;
		for (const auto &mu : dominant)
		{
			const bool covered = std::any_of(dominant.begin(), dominant.end(), [&](const Weight &nu) {
				return dominance_compare(d, mu, nu) == Dominance::less_or_equal;
			});
			if (!covered)
				maximal.push_back(mu);
		}
		if (maximal.empty())
			throw ConsistencyError("W-invariant element has no dominant maximal weight");

		// `dominant` is already lexicographic, so `maximal` is too.
		for (const auto &mu : maximal)
		{
			const Integer c = u.coefficient(mu);
			out[mu] += c;
			u -= scale(c, demazure_char(g, g.longest(), mu));
		}
		for (const auto &[nu, c] : u.terms())
			for (const auto &mu : maximal)
				if (dominance_leq(d, mu, nu))
					throw ConsistencyError("extraction left weight " + nu.str() + " at or above processed weight " +
					                       mu.str());
	}
	return out;
}

} // namespace demchar
