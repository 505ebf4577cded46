#include "demchar/weyl.hpp"

#include "demchar/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace demchar {

namespace {

IntMatrix reflection_matrix(const RootDatum &d, std::size_t i)
{
	IntMatrix s = IntMatrix::identity(d.rank());
	const Weight &alpha = d.simple_root(i);
	for (std::size_t r = 0; r < d.rank(); ++r)
		s(r, i) -= alpha[r];
	return s;
}

void collect_words(const WeylGroup &g, ElementId w, Word &prefix, std::vector<Word> &out, std::size_t limit)
{
	if (out.size() >= limit)
		return;
	if (g.length(w) == 0)
	{
		out.push_back(prefix);
		return;
	}
	for (std::size_t i = 0; i < g.rank() && out.size() < limit; ++i)
	{
		const ElementId shorter = g.left_multiply(i, w);
		if (g.length(shorter) >= g.length(w))
			continue;
		prefix.push_back(i);
		collect_words(g, shorter, prefix, out, limit);
		prefix.pop_back();
	}
}

} // namespace

WeylGroup WeylGroup::generate(const RootDatum &d, const GroupOptions &options)
{
	WeylGroup g(d);
	const std::size_t n = d.rank();
	std::vector<IntMatrix> gens;
	for (std::size_t i = 0; i < n; ++i)
		gens.push_back(reflection_matrix(d, i));

	g.elements_.push_back({IntMatrix::identity(n), 0, {}});
	g.index_.emplace(g.elements_[0].matrix, 0);
	// Ids are handed out in discovery order, so walking them in order is a
	// BFS whose depth-d frontier is sorted by canonical word.
	for (std::size_t cur = 0; cur < g.elements_.size(); ++cur)
	{
		for (std::size_t i = 0; i < n; ++i)
		{
			IntMatrix m = g.elements_[cur].matrix * gens[i];
			if (g.index_.contains(m))
				continue;
			if (g.elements_.size() >= options.max_order)
				throw LimitError("Weyl group of " + d.name() + " exceeds configured maximum order " +
				                 std::to_string(options.max_order));
			Word word = g.elements_[cur].reduced_word;
			word.push_back(i);
			const auto id = static_cast<ElementId>(g.elements_.size());
			g.index_.emplace(m, id);
			g.elements_.push_back({std::move(m), g.elements_[cur].length + 1, std::move(word)});
		}
	}
	g.build_tables();
	g.build_bruhat();
	return g;
}

WeylGroup WeylGroup::from_parts(const RootDatum &d, std::vector<WeylElement> elements,
                                std::vector<std::vector<std::uint64_t>> bruhat_rows)
{
	WeylGroup g(d);
	g.elements_ = std::move(elements);
	if (g.elements_.empty() || g.elements_[0].length != 0)
		throw InputError("stored group does not start with the identity");
	for (std::size_t id = 0; id < g.elements_.size(); ++id)
		if (!g.index_.emplace(g.elements_[id].matrix, static_cast<ElementId>(id)).second)
			throw InputError("stored group has duplicate elements");
	g.build_tables();
	for (std::size_t id = 0; id < g.size(); ++id)
	{
		const auto &e = g.elements_[id];
		if (g.from_word(e.reduced_word) != id || (id > 0 && g.elements_[id - 1].length > e.length))
			throw InputError("stored element " + std::to_string(id) + " is inconsistent with its word");
	}

	g.words_per_row_ = (g.size() + 63) / 64;
	if (bruhat_rows.size() != g.size())
		throw InputError("stored Bruhat table has wrong number of rows");
	g.bruhat_.reserve(g.size() * g.words_per_row_);
	for (const auto &row : bruhat_rows)
	{
		if (row.size() != g.words_per_row_)
			throw InputError("stored Bruhat row has wrong width");
		g.bruhat_.insert(g.bruhat_.end(), row.begin(), row.end());
	}
	return g;
}

void WeylGroup::build_tables()
{
	const std::size_t n = rank();
	std::vector<IntMatrix> gens;
	for (std::size_t i = 0; i < n; ++i)
		gens.push_back(reflection_matrix(datum_, i));

	right_.assign(size() * n, 0);
	left_.assign(size() * n, 0);
	longest_ = 0;
	for (std::size_t id = 0; id < size(); ++id)
	{
		const IntMatrix &m = elements_[id].matrix;
		for (std::size_t i = 0; i < n; ++i)
		{
			auto r = index_.find(m * gens[i]);
			auto l = index_.find(gens[i] * m);
			if (r == index_.end() || l == index_.end())
				throw InputError("element set of " + datum_.name() + " is not closed under multiplication");
			right_[id * n + i] = r->second;
			left_[id * n + i] = l->second;
		}
		if (elements_[id].length > elements_[longest_].length)
			longest_ = static_cast<ElementId>(id);
	}
}

void WeylGroup::build_bruhat()
{
	const std::size_t n = size();
	words_per_row_ = (n + 63) / 64;
	bruhat_.assign(n * words_per_row_, 0);
	auto set_bit = [&](std::size_t tau, std::size_t w) {
		bruhat_[tau * words_per_row_ + w / 64] |= std::uint64_t{1} << (w % 64);
	};

	set_bit(0, 0);
	// Lifting property: with s tau < tau, w <= tau iff min(w, s w) <= s tau.
	for (std::size_t tau = 1; tau < n; ++tau)
	{
		const std::size_t s = elements_[tau].reduced_word.front();
		const ElementId stau = left_multiply(s, static_cast<ElementId>(tau));
		for (std::size_t w = 0; w < n; ++w)
		{
			const ElementId sw = left_multiply(s, static_cast<ElementId>(w));
			const ElementId low = length(sw) < length(static_cast<ElementId>(w)) ? sw : static_cast<ElementId>(w);
			if (bruhat_leq(low, stau))
				set_bit(tau, w);
		}
	}
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const
{
	for (std::size_t i : word(b))
		a = right_multiply(a, i);
	return a;
}

ElementId WeylGroup::inverse(ElementId w) const
{
	ElementId r = identity();
	const Word &wd = word(w);
	for (auto it = wd.rbegin(); it != wd.rend(); ++it)
		r = right_multiply(r, *it);
	return r;
}

ElementId WeylGroup::from_word(std::span<const std::size_t> wd) const
{
	ElementId r = identity();
	for (std::size_t i : wd)
	{
		if (i >= rank())
			throw InputError("simple reflection index " + std::to_string(i + 1) + " out of range for " +
			                 datum_.name());
		r = right_multiply(r, i);
	}
	return r;
}

std::optional<ElementId> WeylGroup::find(const IntMatrix &matrix) const
{
	auto it = index_.find(matrix);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

std::vector<ElementId> WeylGroup::lower_interval(ElementId tau) const
{
	std::vector<ElementId> out;
	for (ElementId w = 0; w < size(); ++w)
		if (bruhat_leq(w, tau))
			out.push_back(w);
	return out;
}

std::vector<Word> WeylGroup::alternative_reduced_words(ElementId w, std::size_t limit) const
{
	std::vector<Word> out;
	Word prefix;
	collect_words(*this, w, prefix, out, limit);
	return out;
}

std::size_t WeylGroup::inversion_count(ElementId w) const
{
	const auto &pos = datum_.positive_roots();
	const std::set<Weight> positive(pos.begin(), pos.end());
	std::size_t count = 0;
	for (const auto &beta : pos)
		if (!positive.contains(element(w).matrix * beta))
			++count;
	return count;
}

Weight apply(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	if (lambda.rank() != g.rank())
		throw InputError("weight " + lambda.str() + " has wrong rank for " + g.datum().name());
	return g.element(w).matrix * lambda;
}

Weight dot_apply(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	const Weight &rho = g.datum().rho();
	return apply(g, w, lambda + rho) - rho;
}

ElementId parse_element(const WeylGroup &g, std::string_view text)
{
	while (!text.empty() && text.front() == ' ')
		text.remove_prefix(1);
	while (!text.empty() && text.back() == ' ')
		text.remove_suffix(1);
	if (text.empty() || text == "e")
		return g.identity();
	if (text == "w0")
		return g.longest();

	Word word;
	std::size_t pos = 0;
	while (pos <= text.size())
	{
		const std::size_t comma = std::min(text.find(',', pos), text.size());
		std::string_view tok = text.substr(pos, comma - pos);
		while (!tok.empty() && tok.front() == ' ')
			tok.remove_prefix(1);
		while (!tok.empty() && tok.back() == ' ')
			tok.remove_suffix(1);
		std::size_t value = 0;
		auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
		if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0 || value > g.rank())
			throw InputError("bad element word '" + std::string(text) + "': expected 'e', 'w0' or indices in 1.." +
			                 std::to_string(g.rank()));
		word.push_back(value - 1);
		pos = comma + 1;
	}
	return g.from_word(word);
}

std::string format_word(const Word &word)
{
	if (word.empty())
		return "e";
	std::string s;
	for (std::size_t k = 0; k < word.size(); ++k)
	{
		if (k)
			s += ',';
		s += std::to_string(word[k] + 1);
	}
	return s;
}

} // namespace demchar
