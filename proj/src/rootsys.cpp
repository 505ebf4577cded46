#include "demchar/rootsys.hpp"

#include "demchar/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace demchar {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void require_same_rank(const Weight &a, const Weight &b)
{
	if (a.rank() != b.rank())
		throw InputError("weight rank mismatch: " + a.str() + " vs " + b.str());
}

void add_bond(IntMatrix &cartan, std::size_t i, std::size_t j)
{
	cartan(i, j) = -1;
	cartan(j, i) = -1;
}

IntMatrix cartan_matrix(Family family, std::size_t n)
{
	IntMatrix c(n, n);
	for (std::size_t i = 0; i < n; ++i)
		c(i, i) = 2;

	switch (family)
	{
	case Family::A:
		for (std::size_t i = 0; i + 1 < n; ++i)
			add_bond(c, i, i + 1);
		break;
	case Family::B:
		for (std::size_t i = 0; i + 1 < n; ++i)
			add_bond(c, i, i + 1);
		c(n - 1, n - 2) = -2; // alpha_n short
		break;
	case Family::C:
		for (std::size_t i = 0; i + 1 < n; ++i)
			add_bond(c, i, i + 1);
		c(n - 2, n - 1) = -2; // alpha_n long
		break;
	case Family::D:
		for (std::size_t i = 0; i + 2 < n; ++i)
			add_bond(c, i, i + 1);
		add_bond(c, n - 3, n - 1);
		break;
	case Family::E:
		// Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
		add_bond(c, 0, 2);
		add_bond(c, 1, 3);
		for (std::size_t i = 2; i + 1 < n; ++i)
			add_bond(c, i, i + 1);
		break;
	case Family::F:
		add_bond(c, 0, 1);
		add_bond(c, 1, 2);
		add_bond(c, 2, 3);
		c(2, 1) = -2;
		break;
	case Family::G:
		c(0, 1) = -3; // alpha_1 short
		c(1, 0) = -1;
		break;
	}
	return c;
}

bool valid_type(Family family, std::size_t n)
{
	switch (family)
	{
	case Family::A: return n >= 1;
	case Family::B: return n >= 2;
	case Family::C: return n >= 3;
	case Family::D: return n >= 4;
	case Family::E: return n >= 6 && n <= 8;
	case Family::F: return n == 4;
	case Family::G: return n == 2;
	}
	return false;
}

// Integer inverse of the Cartan matrix: returns (adjugate, determinant).
std::pair<IntMatrix, Coord> integer_inverse(const IntMatrix &m)
{
	const std::size_t n = m.rows();
	std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			aug[i][j] = m(i, j);
		aug[i][n + i] = 1;
	}

	Rational det = 1;
	for (std::size_t col = 0; col < n; ++col)
	{
		std::size_t pivot = col;
		while (pivot < n && aug[pivot][col] == 0)
			++pivot;
		if (pivot == n)
			throw ConsistencyError("singular Cartan matrix");
		if (pivot != col)
		{
			std::swap(aug[pivot], aug[col]);
			det = -det;
		}
		const Rational p = aug[col][col];
		det *= p;
		for (auto &x : aug[col])
			x /= p;
		for (std::size_t r = 0; r < n; ++r)
		{
			if (r == col || aug[r][col] == 0)
				continue;
			const Rational f = aug[r][col];
			for (std::size_t k = 0; k < 2 * n; ++k)
				aug[r][k] -= f * aug[col][k];
		}
	}

	IntMatrix adj(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			const Rational v = aug[i][n + j] * det;
			if (denominator(v) != 1)
				throw ConsistencyError("non-integral adjugate");
			adj(i, j) = static_cast<Coord>(numerator(v));
		}
	if (denominator(det) != 1)
		throw ConsistencyError("non-integral determinant");
	return {adj, static_cast<Coord>(numerator(det))};
}

} // namespace

bool Weight::is_zero() const
{
	return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Weight &Weight::operator+=(const Weight &other)
{
	require_same_rank(*this, other);
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] += other.coords_[i];
	return *this;
}

Weight &Weight::operator-=(const Weight &other)
{
	require_same_rank(*this, other);
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] -= other.coords_[i];
	return *this;
}

Weight operator-(Weight a)
{
	for (auto &c : a.coords_)
		c = -c;
	return a;
}

Weight operator*(Coord k, Weight a)
{
	for (auto &c : a.coords_)
		c *= k;
	return a;
}

std::strong_ordering operator<=>(const Weight &a, const Weight &b)
{
	return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
	                                              b.coords_.begin(), b.coords_.end());
}

std::ostream &operator<<(std::ostream &os, const Weight &w)
{
	os << '(';
	for (std::size_t i = 0; i < w.rank(); ++i)
		os << (i ? "," : "") << w[i];
	return os << ')';
}

std::string Weight::str() const
{
	std::ostringstream os;
	os << *this;
	return os.str();
}

std::size_t WeightHash::operator()(const Weight &w) const noexcept
{
	std::size_t h = 0xcbf29ce484222325ULL;
	for (Coord c : w.coords())
		h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
	return h;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
	if (a.cols() != b.rows())
		throw InputError("matrix shape mismatch");
	IntMatrix r(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k)
		{
			const Coord x = a(i, k);
			if (x == 0)
				continue;
			for (std::size_t j = 0; j < b.cols(); ++j)
				r(i, j) += x * b(k, j);
		}
	return r;
}

Weight operator*(const IntMatrix &m, const Weight &w)
{
	if (m.cols() != w.rank())
		throw InputError("matrix/weight shape mismatch");
	Weight r(m.rows());
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		Coord s = 0;
		for (std::size_t j = 0; j < m.cols(); ++j)
			s += m(i, j) * w[j];
		r[i] = s;
	}
	return r;
}

std::size_t IntMatrixHash::operator()(const IntMatrix &m) const noexcept
{
	std::size_t h = 0xcbf29ce484222325ULL;
	for (Coord c : m.data())
		h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
	return h;
}

Family parse_family(char letter)
{
	switch (letter)
	{
	case 'A': case 'a': return Family::A;
	case 'B': case 'b': return Family::B;
	case 'C': case 'c': return Family::C;
	case 'D': case 'd': return Family::D;
	case 'E': case 'e': return Family::E;
	case 'F': case 'f': return Family::F;
	case 'G': case 'g': return Family::G;
	}
	throw InputError(std::string("unknown root system family '") + letter + "'");
}

std::string type_name(Family family, std::size_t rank)
{
	return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool RootCoordinates::integral() const
{
	return std::all_of(numerators.begin(), numerators.end(),
	                   [this](Coord c) { return c % denominator == 0; });
}

RootCoordinates RootDatum::root_coordinates(const Weight &w) const
{
	if (w.rank() != rank_)
		throw InputError("weight " + w.str() + " has wrong rank for " + name());
	RootCoordinates rc;
	rc.denominator = cartan_det_;
	const Weight num = cartan_adjugate_ * w;
	rc.numerators.assign(num.coords().begin(), num.coords().end());
	return rc;
}

RootDatum build_datum(Family family, std::size_t rank, const DatumOptions &options)
{
	if (!valid_type(family, rank))
		throw InputError("not a finite root system type: " + type_name(family, rank));
	if (rank > options.max_rank)
		throw LimitError("rank " + std::to_string(rank) + " exceeds configured maximum " +
		                 std::to_string(options.max_rank));

	RootDatum d;
	d.family_ = family;
	d.rank_ = rank;
	d.cartan_ = cartan_matrix(family, rank);
	std::tie(d.cartan_adjugate_, d.cartan_det_) = integer_inverse(d.cartan_);

	for (std::size_t j = 0; j < rank; ++j)
	{
		Weight alpha(rank);
		for (std::size_t i = 0; i < rank; ++i)
			alpha[i] = d.cartan_(i, j);
		d.simple_roots_.push_back(alpha);
	}
	d.rho_ = Weight(rank);
	for (std::size_t i = 0; i < rank; ++i)
		d.rho_[i] = 1;

	// All roots are the W-orbits of the simple roots.
	std::set<Weight> roots(d.simple_roots_.begin(), d.simple_roots_.end());
	std::vector<Weight> frontier(d.simple_roots_);
	while (!frontier.empty())
	{
		std::vector<Weight> next;
		for (const auto &beta : frontier)
			for (std::size_t i = 0; i < rank; ++i)
			{
				Weight image = simple_reflection(d, i, beta);
				if (roots.insert(image).second)
					next.push_back(std::move(image));
			}
		frontier = std::move(next);
	}

	std::vector<std::pair<Coord, Weight>> keyed;
	for (const auto &beta : roots)
	{
		const auto rc = d.root_coordinates(beta);
		if (!rc.integral())
			throw ConsistencyError("root " + beta.str() + " outside the root lattice");
		const bool positive = std::any_of(rc.numerators.begin(), rc.numerators.end(),
		                                  [&](Coord c) { return c / rc.denominator > 0; });
		if (positive)
			keyed.emplace_back(std::accumulate(rc.numerators.begin(), rc.numerators.end(), Coord{0}) /
			                       rc.denominator,
			                   beta);
	}
	std::sort(keyed.begin(), keyed.end());
	for (auto &[height, beta] : keyed)
		d.positive_roots_.push_back(std::move(beta));
	return d;
}

Coord pairing(const RootDatum &d, const Weight &lambda, std::size_t i)
{
	if (i >= d.rank())
		throw InputError("simple root index " + std::to_string(i + 1) + " out of range for " + d.name());
	if (lambda.rank() != d.rank())
		throw InputError("weight " + lambda.str() + " has wrong rank for " + d.name());
	return lambda[i];
}

Weight simple_reflection(const RootDatum &d, std::size_t i, const Weight &lambda)
{
	const Coord t = pairing(d, lambda, i);
	Weight r = lambda;
	const Weight &alpha = d.simple_root(i);
	for (std::size_t k = 0; k < r.rank(); ++k)
		r[k] -= t * alpha[k];
	return r;
}

bool is_dominant(const Weight &lambda)
{
	const auto c = lambda.coords();
	return std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 0; });
}

bool is_regular_dominant(const Weight &lambda)
{
	const auto c = lambda.coords();
	return std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 1; });
}

Dominance dominance_compare(const RootDatum &d, const Weight &a, const Weight &b)
{
	if (a == b)
		return Dominance::equal;
	const auto rc = d.root_coordinates(b - a);
	if (!rc.integral())
		return Dominance::non_integral;
	// denominator is positive for every finite type
	const bool nonneg = std::all_of(rc.numerators.begin(), rc.numerators.end(), [](Coord c) { return c >= 0; });
	const bool nonpos = std::all_of(rc.numerators.begin(), rc.numerators.end(), [](Coord c) { return c <= 0; });
	if (nonneg)
		return Dominance::less_or_equal;
	if (nonpos)
		return Dominance::greater_or_equal;
	return Dominance::incomparable;
}

bool dominance_leq(const RootDatum &d, const Weight &a, const Weight &b)
{
	const auto rel = dominance_compare(d, a, b);
	return rel == Dominance::equal || rel == Dominance::less_or_equal;
}

const char *to_string(Dominance rel)
{
	switch (rel)
	{
	case Dominance::less_or_equal: return "less-or-equal";
	case Dominance::greater_or_equal: return "greater-or-equal";
	case Dominance::equal: return "equal";
	case Dominance::incomparable: return "incomparable";
	case Dominance::non_integral: return "non-integral";
	}
	return "?";
}

} // namespace demchar
