#pragma once

#include "demchar/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace demchar {

/// Zero-based simple-reflection indices.
using Word = std::vector<std::size_t>;

/// Index of an element within its WeylGroup. Ids are assigned in
/// (length, lexicographic canonical word) order, so 0 is the identity.
using ElementId = std::uint32_t;

struct WeylElement
{
	IntMatrix matrix; // acts on fundamental-weight coordinates
	std::size_t length = 0;
	Word reduced_word; // lexicographically smallest reduced word
};

struct GroupOptions
{
	std::size_t max_order = 10000;
};

/// The full Weyl group of a root datum with multiplication tables by simple
/// reflections and the Bruhat order as a dense bit table.
class WeylGroup
{
public:
	/// Breadth-first closure under right multiplication by simple reflections.
	/// Throws LimitError once the group would exceed options.max_order.
	static WeylGroup generate(const RootDatum &d, const GroupOptions &options = {});

	/// Rebuilds a group from stored elements and Bruhat rows (cache path).
	/// Multiplication tables are recomputed; the element list must be in
	/// canonical order.
	static WeylGroup from_parts(const RootDatum &d, std::vector<WeylElement> elements,
	                            std::vector<std::vector<std::uint64_t>> bruhat_rows);

	const RootDatum &datum() const { return datum_; }
	std::size_t rank() const { return datum_.rank(); }
	std::size_t size() const { return elements_.size(); }
	const WeylElement &element(ElementId id) const { return elements_.at(id); }
	const std::vector<WeylElement> &elements() const { return elements_; }
	ElementId identity() const { return 0; }
	ElementId longest() const { return longest_; }
	std::size_t length(ElementId id) const { return elements_[id].length; }
	const Word &word(ElementId id) const { return elements_[id].reduced_word; }

	/// w * s_i
	ElementId right_multiply(ElementId w, std::size_t i) const { return right_[w * rank() + i]; }
	/// s_i * w
	ElementId left_multiply(std::size_t i, ElementId w) const { return left_[w * rank() + i]; }
	ElementId multiply(ElementId a, ElementId b) const;
	ElementId inverse(ElementId w) const;

	/// Product of the word's letters (need not be reduced).
	ElementId from_word(std::span<const std::size_t> word) const;
	std::optional<ElementId> find(const IntMatrix &matrix) const;

	bool bruhat_leq(ElementId w, ElementId tau) const
	{
		return (bruhat_[tau * words_per_row_ + w / 64] >> (w % 64)) & 1u;
	}
	std::span<const std::uint64_t> bruhat_row(ElementId tau) const
	{
		return {bruhat_.data() + tau * words_per_row_, words_per_row_};
	}

	/// All w <= tau, ordered by length then canonical word.
	std::vector<ElementId> lower_interval(ElementId tau) const;

	/// Up to `limit` reduced words of w in lexicographic order.
	std::vector<Word> alternative_reduced_words(ElementId w, std::size_t limit) const;

	/// |{beta in R+ : w(beta) in -R+}|
	std::size_t inversion_count(ElementId w) const;

private:
	explicit WeylGroup(const RootDatum &d) : datum_(d) {}
	void build_tables();
	void build_bruhat();

	RootDatum datum_;
	std::vector<WeylElement> elements_;
	std::unordered_map<IntMatrix, ElementId, IntMatrixHash> index_;
	std::vector<ElementId> right_;
	std::vector<ElementId> left_;
	ElementId longest_ = 0;
	std::size_t words_per_row_ = 0;
	std::vector<std::uint64_t> bruhat_;
};

Weight apply(const WeylGroup &g, ElementId w, const Weight &lambda);

/// w . lambda = w(lambda + rho) - rho
Weight dot_apply(const WeylGroup &g, ElementId w, const Weight &lambda);

/// Parses "e", "w0", or comma-separated one-based indices such as "1,2,1".
ElementId parse_element(const WeylGroup &g, std::string_view text);

/// One-based, comma-separated; "e" for the empty word.
std::string format_word(const Word &word);

} // namespace demchar
