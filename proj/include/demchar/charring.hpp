#pragma once

#include "demchar/rootsys.hpp"
#include "demchar/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace demchar {

using Integer = boost::multiprecision::cpp_int;

/// An element of the group ring Z[X(T)]: a finite sum of c_mu e^mu with
/// exact integer coefficients. Zero coefficients are never stored, and terms
/// iterate in lexicographic weight order.
class CharElement
{
public:
	using Terms = std::map<Weight, Integer>;

	explicit CharElement(std::size_t rank = 0) : rank_(rank) {}

	static CharElement zero(std::size_t rank) { return CharElement(rank); }
	static CharElement monomial(const Weight &lambda, Integer coeff = 1);

	std::size_t rank() const { return rank_; }
	const Terms &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	Integer coefficient(const Weight &mu) const;

	/// Sum of coefficients, i.e. the dimension of a module with this character.
	Integer dimension() const;
	bool nonnegative() const;

	/// Adds c e^mu, dropping the term if it cancels.
	void add_term(const Weight &mu, const Integer &c);

	CharElement &operator+=(const CharElement &other);
	CharElement &operator-=(const CharElement &other);
	CharElement &operator*=(const CharElement &other);
	friend CharElement operator+(CharElement a, const CharElement &b) { return a += b; }
	friend CharElement operator-(CharElement a, const CharElement &b) { return a -= b; }
	friend CharElement operator*(const CharElement &a, const CharElement &b);
	friend CharElement operator-(CharElement a);
	friend CharElement scale(const Integer &n, CharElement v);

	friend bool operator==(const CharElement &, const CharElement &) = default;

	/// Multiplication by the monomial e^lambda, a shift of every weight.
	CharElement shifted(const Weight &lambda) const;

private:
	void require_rank(const CharElement &other) const;
	void require_rank(const Weight &mu) const;

	std::size_t rank_;
	Terms terms_;
};

/// Dual character: sum c_mu e^mu -> sum c_mu e^{-mu}.
CharElement star(const CharElement &v);

/// W acts by permuting exponents: sum c_mu e^{w(mu)}.
CharElement w_apply(const WeylGroup &g, ElementId w, const CharElement &v);

enum class Extreme { lowest, highest };

/// The support weight that is below (lowest) or above (highest) every other
/// support weight in the dominance order, if one exists. Throws InputError
/// for the zero element.
std::optional<Weight> extreme_weight(const RootDatum &d, const CharElement &v, Extreme direction);

/// Human-readable form, e.g. "e^(1,0) + 2*e^(0,0) - e^(-1,1)"; "0" if empty.
std::ostream &operator<<(std::ostream &os, const CharElement &v);
std::string to_string(const CharElement &v);

} // namespace demchar
