#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace demchar {

using Coord = std::int64_t;

/// An integral weight, stored by its coefficients in the fundamental-weight
/// basis. With that basis the pairing with the i-th simple coroot is just
/// coordinate i.
class Weight
{
public:
	using Storage = boost::container::small_vector<Coord, 8>;

	Weight() = default;
	explicit Weight(std::size_t rank) : coords_(rank, 0) {}
	Weight(std::initializer_list<Coord> coords) : coords_(coords) {}
	explicit Weight(std::span<const Coord> coords)
	    : coords_(coords.begin(), coords.end())
	{}

	std::size_t rank() const { return coords_.size(); }
	Coord operator[](std::size_t i) const { return coords_[i]; }
	Coord &operator[](std::size_t i) { return coords_[i]; }
	std::span<const Coord> coords() const { return {coords_.data(), coords_.size()}; }
	bool is_zero() const;

	Weight &operator+=(const Weight &other);
	Weight &operator-=(const Weight &other);
	friend Weight operator+(Weight a, const Weight &b) { return a += b; }
	friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
	friend Weight operator-(Weight a);
	friend Weight operator*(Coord k, Weight a);

	friend bool operator==(const Weight &a, const Weight &b)
	{
		return a.coords_ == b.coords_;
	}
	friend std::strong_ordering operator<=>(const Weight &a, const Weight &b);

	friend std::ostream &operator<<(std::ostream &os, const Weight &w);
	std::string str() const;

private:
	Storage coords_;
};

struct WeightHash
{
	std::size_t operator()(const Weight &w) const noexcept;
};

/// Dense row-major integer matrix, small enough to copy freely.
class IntMatrix
{
public:
	IntMatrix() = default;
	IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
	static IntMatrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	Coord operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
	Coord &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	std::span<const Coord> data() const { return data_; }

	friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
	friend Weight operator*(const IntMatrix &m, const Weight &w);
	friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Coord> data_;
};

struct IntMatrixHash
{
	std::size_t operator()(const IntMatrix &m) const noexcept;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family parse_family(char letter);
std::string type_name(Family family, std::size_t rank);

/// Coordinates in the simple-root basis, as numerators over a common
/// denominator (the determinant of the Cartan matrix). Not reduced.
struct RootCoordinates
{
	std::vector<Coord> numerators;
	Coord denominator = 1;

	bool integral() const;
};

struct DatumOptions
{
	std::size_t max_rank = 8;
};

/// Immutable data of a finite reduced root system.
///
/// The Cartan matrix follows cartan(i, j) = <alpha_j, alpha_i^vee>, so the
/// fundamental-weight coordinates of alpha_j are column j.
class RootDatum
{
public:
	Family family() const { return family_; }
	std::size_t rank() const { return rank_; }
	std::string name() const { return type_name(family_, rank_); }
	const IntMatrix &cartan() const { return cartan_; }
	const std::vector<Weight> &simple_roots() const { return simple_roots_; }
	const Weight &simple_root(std::size_t i) const { return simple_roots_.at(i); }
	/// Sorted by height, then lexicographically.
	const std::vector<Weight> &positive_roots() const { return positive_roots_; }
	const Weight &rho() const { return rho_; }

	/// Solves w = sum c_i alpha_i exactly.
	RootCoordinates root_coordinates(const Weight &w) const;

	friend RootDatum build_datum(Family family, std::size_t rank, const DatumOptions &options);

private:
	RootDatum() = default;

	Family family_ = Family::A;
	std::size_t rank_ = 0;
	IntMatrix cartan_;
	IntMatrix cartan_adjugate_;
	Coord cartan_det_ = 1;
	std::vector<Weight> simple_roots_;
	std::vector<Weight> positive_roots_;
	Weight rho_;
};

/// Throws InputError for pairs outside A_n (n>=1), B_n (n>=2), C_n (n>=3),
/// D_n (n>=4), E6-E8, F4, G2, and LimitError above options.max_rank.
RootDatum build_datum(Family family, std::size_t rank, const DatumOptions &options = {});

/// <lambda, alpha_i^vee>; i is zero-based.
Coord pairing(const RootDatum &d, const Weight &lambda, std::size_t i);

Weight simple_reflection(const RootDatum &d, std::size_t i, const Weight &lambda);

bool is_dominant(const Weight &lambda);
bool is_regular_dominant(const Weight &lambda);

enum class Dominance { less_or_equal, greater_or_equal, equal, incomparable, non_integral };

/// Relation of a to b in the dominance order: less_or_equal means b - a is
/// a nonzero nonnegative integral combination of simple roots.
Dominance dominance_compare(const RootDatum &d, const Weight &a, const Weight &b);

/// a <= b in the dominance order (including equality).
bool dominance_leq(const RootDatum &d, const Weight &a, const Weight &b);

const char *to_string(Dominance rel);

} // namespace demchar
