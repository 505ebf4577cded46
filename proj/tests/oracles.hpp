#pragma once

// Brute-force and closed-form reference computations used only by tests.
// None of these call into the Demazure operator code they are checking.

#include "demchar/rootsys.hpp"
#include "demchar/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

namespace demchar::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Elements obtained as products of subwords of tau's canonical reduced
/// word; by the subword property this is exactly the Bruhat lower interval.
inline std::set<ElementId> subword_interval(const WeylGroup &g, ElementId tau)
{
	const Word &word = g.word(tau);
	std::set<ElementId> out;
	const std::size_t n = word.size();
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
	{
		ElementId w = g.identity();
		for (std::size_t k = 0; k < n; ++k)
			if (mask >> k & 1)
				w = g.right_multiply(w, word[k]);
		out.insert(w);
	}
	return out;
}

/// d_i = (alpha_i, alpha_i) / 2 up to a common factor, from d_i a_ij = d_j a_ji.
inline std::vector<Rational> symmetrizer(const RootDatum &d)
{
	const std::size_t n = d.rank();
	std::vector<Rational> sym(n, 0);
	sym[0] = 1;
	bool changed = true;
	while (changed)
	{
		changed = false;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				if (sym[i] != 0 && sym[j] == 0 && d.cartan()(i, j) != 0)
				{
					sym[j] = sym[i] * d.cartan()(i, j) / d.cartan()(j, i);
					changed = true;
				}
	}
	return sym;
}

/// Simple-root coordinates by Gaussian elimination over the rationals.
inline std::vector<Rational> alpha_coordinates(const RootDatum &d, const Weight &w)
{
	const std::size_t n = d.rank();
	std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			m[i][j] = d.cartan()(i, j);
		m[i][n] = w[i];
	}
	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t p = c;
		while (m[p][c] == 0)
			++p;
		std::swap(m[p], m[c]);
		for (std::size_t r = 0; r < n; ++r)
			if (r != c && m[r][c] != 0)
			{
				const Rational f = m[r][c] / m[c][c];
				for (std::size_t k = c; k <= n; ++k)
					m[r][k] -= f * m[c][k];
			}
	}
	std::vector<Rational> x(n);
	for (std::size_t i = 0; i < n; ++i)
		x[i] = m[i][n] / m[i][i];
	return x;
}

/// Weyl dimension formula prod_{beta > 0} (lambda + rho, beta) / (rho, beta),
/// with (mu, alpha_i) proportional to d_i mu_i.
inline Rational weyl_dimension(const RootDatum &d, const Weight &lambda)
{
	const auto sym = symmetrizer(d);
	Rational dim = 1;
	for (const auto &beta : d.positive_roots())
	{
		const auto c = alpha_coordinates(d, beta);
		Rational num = 0, den = 0;
		for (std::size_t i = 0; i < d.rank(); ++i)
		{
			num += c[i] * sym[i] * (lambda[i] + 1);
			den += c[i] * sym[i];
		}
		dim *= num / den;
	}
	return dim;
}

/// w has a right descent s_i with <lambda, alpha_i^vee> = 1. Then
/// D_w(e^{-lambda}) = D_{w s_i} D_i(e^{-lambda}) = 0, since D_i kills e^mu
/// when <mu, alpha_i^vee> = -1.
inline bool has_unit_right_descent(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	for (std::size_t i = 0; i < g.rank(); ++i)
		if (lambda[i] == 1 && g.length(g.right_multiply(w, i)) < g.length(w))
			return true;
	return false;
}

inline std::size_t classical_positive_roots(Family f, std::size_t n)
{
	switch (f)
	{
	case Family::A: return n * (n + 1) / 2;
	case Family::B:
	case Family::C: return n * n;
	case Family::D: return n * (n - 1);
	case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
	case Family::F: return 24;
	case Family::G: return 6;
	}
	return 0;
}

// Portable uniform integers (std distributions differ between libraries).
inline Coord uniform(std::mt19937_64 &rng, Coord lo, Coord hi)
{
	return lo + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Weight random_weight(std::mt19937_64 &rng, std::size_t rank, Coord lo, Coord hi)
{
	Weight w(rank);
	for (std::size_t i = 0; i < rank; ++i)
		w[i] = uniform(rng, lo, hi);
	return w;
}

} // namespace demchar::oracle
