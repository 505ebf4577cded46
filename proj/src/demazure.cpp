#include "demchar/demazure.hpp"

#include "demchar/errors.hpp"

namespace demchar {

CharElement demazure_step(const RootDatum &d, std::size_t i, const CharElement &v)
{
	if (i >= d.rank())
		throw InputError("simple root index " + std::to_string(i + 1) + " out of range for " + d.name());
	if (v.rank() != d.rank())
		throw InputError("character rank does not match " + d.name());

	const Weight &alpha = d.simple_root(i);
	CharElement out(d.rank());
	for (const auto &[lambda, c] : v.terms())
	{
		const Coord t = lambda[i];
		if (t >= 0)
		{
			Weight mu = lambda;
			for (Coord k = 0; k <= t; ++k)
			{
				out.add_term(mu, c);
				mu -= alpha;
			}
		}
		else if (t <= -2)
		{
			const Integer neg = -c;
			Weight mu = lambda;
			for (Coord k = 1; k <= -t - 1; ++k)
			{
				mu += alpha;
				out.add_term(mu, neg);
			}
		}
	}
	return out;
}

CharElement demazure_word(const RootDatum &d, std::span<const std::size_t> word, const CharElement &v)
{
	CharElement r = v;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		r = demazure_step(d, *it, r);
	return r;
}

CharElement demazure_char(const WeylGroup &g, ElementId tau, const Weight &lambda)
{
	if (lambda.rank() != g.rank())
		throw InputError("weight " + lambda.str() + " has wrong rank for " + g.datum().name());
	if (!is_dominant(lambda))
		throw InputError("Demazure character requires a dominant weight, got " + lambda.str());
	return demazure_word(g.datum(), g.word(tau), CharElement::monomial(lambda));
}

CharElement euler_char(const WeylGroup &g, ElementId w, const Weight &mu)
{
	if (mu.rank() != g.rank())
		throw InputError("weight " + mu.str() + " has wrong rank for " + g.datum().name());
	return demazure_word(g.datum(), g.word(w), CharElement::monomial(mu));
}

namespace {

void require_regular_dominant(const WeylGroup &g, const Weight &lambda)
{
	if (lambda.rank() != g.rank())
		throw InputError("weight " + lambda.str() + " has wrong rank for " + g.datum().name());
	if (!is_regular_dominant(lambda))
		throw InputError("top cohomology character requires a regular dominant weight, got " + lambda.str());
}

} // namespace

CharElement top_cohomology_char(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	require_regular_dominant(g, lambda);
	CharElement chi = euler_char(g, w, -lambda);
	return g.length(w) % 2 ? -std::move(chi) : chi;
}

std::vector<CharElement> euler_char_table(const WeylGroup &g, const Weight &mu, Execution exec)
{
	if (mu.rank() != g.rank())
		throw InputError("weight " + mu.str() + " has wrong rank for " + g.datum().name());

	std::vector<CharElement> table(g.size(), CharElement(g.rank()));
	table[g.identity()] = CharElement::monomial(mu);

	// Ids are sorted by length, so each length level is a contiguous range.
	std::size_t begin = 1;
	while (begin < g.size())
	{
		std::size_t end = begin;
		while (end < g.size() && g.length(static_cast<ElementId>(end)) == g.length(static_cast<ElementId>(begin)))
			++end;
		for_each_index(end - begin, exec, [&](std::size_t k) {
			const auto w = static_cast<ElementId>(begin + k);
			const std::size_t s = g.word(w).front();
			table[w] = demazure_step(g.datum(), s, table[g.left_multiply(s, w)]);
		});
		begin = end;
	}
	return table;
}

TopCohomologyTable::TopCohomologyTable(const WeylGroup &g, const Weight &lambda, Execution exec)
    : lambda_(lambda)
{
	require_regular_dominant(g, lambda);
	chars_ = euler_char_table(g, -lambda, exec);
	for (ElementId w = 0; w < chars_.size(); ++w)
		if (g.length(w) % 2)
			chars_[w] = -std::move(chars_[w]);
}

} // namespace demchar
