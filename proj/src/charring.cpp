#include "demchar/charring.hpp"

#include "demchar/errors.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace demchar {

CharElement CharElement::monomial(const Weight &lambda, Integer coeff)
{
	CharElement v(lambda.rank());
	v.add_term(lambda, coeff);
	return v;
}

Integer CharElement::coefficient(const Weight &mu) const
{
	auto it = terms_.find(mu);
	return it == terms_.end() ? Integer(0) : it->second;
}

Integer CharElement::dimension() const
{
	Integer s = 0;
	for (const auto &[mu, c] : terms_)
		s += c;
	return s;
}

bool CharElement::nonnegative() const
{
	for (const auto &[mu, c] : terms_)
		if (c < 0)
			return false;
	return true;
}

void CharElement::add_term(const Weight &mu, const Integer &c)
{
	require_rank(mu);
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(mu, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void CharElement::require_rank(const CharElement &other) const
{
	if (rank_ != other.rank_)
		throw InputError("character rank mismatch: " + std::to_string(rank_) + " vs " +
		                 std::to_string(other.rank_));
}

void CharElement::require_rank(const Weight &mu) const
{
	if (rank_ != mu.rank())
		throw InputError("weight " + mu.str() + " does not have rank " + std::to_string(rank_));
}

CharElement &CharElement::operator+=(const CharElement &other)
{
	require_rank(other);
	for (const auto &[mu, c] : other.terms_)
		add_term(mu, c);
	return *this;
}

CharElement &CharElement::operator-=(const CharElement &other)
{
	require_rank(other);
	for (const auto &[mu, c] : other.terms_)
		add_term(mu, -c);
	return *this;
}

CharElement &CharElement::operator*=(const CharElement &other)
{
	*this = *this * other;
	return *this;
}

CharElement operator*(const CharElement &a, const CharElement &b)
{
	a.require_rank(b);
	CharElement r(a.rank_);
	for (const auto &[mu, c] : a.terms_)
		for (const auto &[nu, d] : b.terms_)
			r.add_term(mu + nu, c * d);
	return r;
}

CharElement operator-(CharElement a)
{
	for (auto &[mu, c] : a.terms_)
		c = -c;
	return a;
}

CharElement scale(const Integer &n, CharElement v)
{
	if (n == 0)
	{
		v.terms_.clear();
		return v;
	}
	for (auto &[mu, c] : v.terms_)
		c *= n;
	return v;
}

CharElement CharElement::shifted(const Weight &lambda) const
{
	require_rank(lambda);
	CharElement r(rank_);
	// translation preserves lexicographic order
	for (const auto &[mu, c] : terms_)
		r.terms_.emplace_hint(r.terms_.end(), mu + lambda, c);
	return r;
}

CharElement star(const CharElement &v)
{
	CharElement r(v.rank());
	for (const auto &[mu, c] : v.terms())
		r.add_term(-mu, c);
	return r;
}

CharElement w_apply(const WeylGroup &g, ElementId w, const CharElement &v)
{
	if (v.rank() != g.rank())
		throw InputError("character rank does not match " + g.datum().name());
	const IntMatrix &m = g.element(w).matrix;
	CharElement r(v.rank());
	for (const auto &[mu, c] : v.terms())
		r.add_term(m * mu, c);
	return r;
}

std::optional<Weight> extreme_weight(const RootDatum &d, const CharElement &v, Extreme direction)
{
	if (v.is_zero())
		throw InputError("extreme weight of the zero character is undefined");
	if (v.rank() != d.rank())
		throw InputError("character rank does not match " + d.name());

	// Height (sum of simple-root coordinates, scaled by the Cartan
	// determinant) is strictly monotone along the dominance order, so the
	// only candidate is the unique support weight of extremal height.
	auto height = [&](const Weight &mu) {
		const auto rc = d.root_coordinates(mu);
		return std::accumulate(rc.numerators.begin(), rc.numerators.end(), Coord{0});
	};
	const Weight *best = nullptr;
	Coord best_height = 0;
	bool tie = false;
	for (const auto &[mu, c] : v.terms())
	{
		const Coord h = height(mu);
		const bool better = direction == Extreme::lowest ? h < best_height : h > best_height;
		if (!best || better)
		{
			best = &mu;
			best_height = h;
			tie = false;
		}
		else if (h == best_height)
			tie = true;
	}
	if (tie)
		return std::nullopt;

	for (const auto &[mu, c] : v.terms())
	{
		const bool ok = direction == Extreme::lowest ? dominance_leq(d, *best, mu) : dominance_leq(d, mu, *best);
		if (!ok)
			return std::nullopt;
	}
	return *best;
}

std::ostream &operator<<(std::ostream &os, const CharElement &v)
{
	if (v.is_zero())
		return os << "0";
	bool first = true;
	for (const auto &[mu, c] : v.terms())
	{
		Integer mag = c < 0 ? Integer(-c) : c;
		if (first)
			os << (c < 0 ? "-" : "");
		else
			os << (c < 0 ? " - " : " + ");
		if (mag != 1)
			os << mag << '*';
		os << "e^" << mu;
		first = false;
	}
	return os;
}

std::string to_string(const CharElement &v)
{
	std::ostringstream os;
	os << v;
	return os.str();
}

} // namespace demchar
