#include "demchar/json_io.hpp"

#include "demchar/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace demchar {

namespace {

std::string to_decimal(const Integer &n)
{
	return n.str();
}

Integer from_decimal(const std::string &s)
{
	if (s.empty())
		throw InputError("empty integer string");
	std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (start == s.size())
		throw InputError("bad integer string '" + s + "'");
	for (std::size_t k = start; k < s.size(); ++k)
		if (s[k] < '0' || s[k] > '9')
			throw InputError("bad integer string '" + s + "'");
	return Integer((s[0] == '+' ? s.substr(1) : s).c_str());
}

std::string row_to_hex(std::span<const std::uint64_t> row)
{
	static const char digits[] = "0123456789abcdef";
	std::string s;
	s.reserve(row.size() * 16);
	for (std::uint64_t word : row)
		for (int shift = 60; shift >= 0; shift -= 4)
			s += digits[(word >> shift) & 0xf];
	return s;
}

std::vector<std::uint64_t> row_from_hex(const std::string &s)
{
	if (s.size() % 16 != 0)
		throw InputError("bad Bruhat row length");
	std::vector<std::uint64_t> row(s.size() / 16, 0);
	for (std::size_t k = 0; k < s.size(); ++k)
	{
		const char c = s[k];
		std::uint64_t v;
		if (c >= '0' && c <= '9')
			v = c - '0';
		else if (c >= 'a' && c <= 'f')
			v = c - 'a' + 10;
		else
			throw InputError("bad hex digit in Bruhat row");
		row[k / 16] = (row[k / 16] << 4) | v;
	}
	return row;
}

} // namespace

Json weight_to_json(const Weight &w)
{
	Json j = Json::array();
	for (Coord c : w.coords())
		j.push_back(c);
	return j;
}

Weight weight_from_json(const Json &j)
{
	if (!j.is_array())
		throw InputError("weight must be a JSON array of integers");
	Weight w(j.size());
	for (std::size_t i = 0; i < j.size(); ++i)
	{
		if (!j[i].is_number_integer())
			throw InputError("weight must be a JSON array of integers");
		w[i] = j[i].get<Coord>();
	}
	return w;
}

Json char_to_json(const CharElement &v)
{
	Json terms = Json::array();
	for (const auto &[mu, c] : v.terms())
		terms.push_back(Json{{"weight", weight_to_json(mu)}, {"coeff", to_decimal(c)}});
	return Json{{"rank", v.rank()}, {"terms", std::move(terms)}};
}

CharElement char_from_json(const Json &j)
{
	try
	{
		const auto rank = j.at("rank").get<std::size_t>();
		CharElement v(rank);
		for (const auto &t : j.at("terms"))
		{
			const Weight mu = weight_from_json(t.at("weight"));
			const auto &coeff = t.at("coeff");
			// numbers are accepted for hand-written input
			v.add_term(mu, coeff.is_string() ? from_decimal(coeff.get<std::string>()) : Integer(coeff.get<std::int64_t>()));
		}
		return v;
	}
	catch (const nlohmann::json::exception &e)
	{
		throw InputError(std::string("malformed character JSON: ") + e.what());
	}
}

Json report_to_json(const VerificationReport &r)
{
	Json diff = char_to_json(r.difference).at("terms");
	Json j{{"check", r.check},
	       {"tau", format_word(r.tau_word)},
	       {"lambda", weight_to_json(r.lambda)},
	       {"passed", r.passed},
	       {"dim_lhs", to_decimal(r.dim_lhs)},
	       {"dim_rhs", to_decimal(r.dim_rhs)},
	       {"interval_size", r.interval_size},
	       {"difference_terms", std::move(diff)}};
	if (!r.passed)
	{
		j["lhs"] = char_to_json(r.lhs);
		j["rhs"] = char_to_json(r.rhs);
	}
	return j;
}

Json decomposition_to_json(const WeylGroup &g, const Decomposition &dec)
{
	Json coeffs = Json::array();
	for (const auto &[mu, c] : dec)
		coeffs.push_back(Json{{"mu", weight_to_json(mu)},
		                      {"lambda", weight_to_json(basis_label(g, mu))},
		                      {"coeff", to_decimal(c)}});
	return Json{{"coefficients", std::move(coeffs)}};
}

Json group_to_json(const WeylGroup &g)
{
	const RootDatum &d = g.datum();
	Json cartan = Json::array();
	for (std::size_t i = 0; i < d.rank(); ++i)
	{
		Json row = Json::array();
		for (std::size_t k = 0; k < d.rank(); ++k)
			row.push_back(d.cartan()(i, k));
		cartan.push_back(std::move(row));
	}

	Json elements = Json::array();
	Json bruhat = Json::array();
	for (ElementId w = 0; w < g.size(); ++w)
	{
		const auto &e = g.element(w);
		Json word = Json::array();
		for (std::size_t i : e.reduced_word)
			word.push_back(i + 1);
		Json matrix(std::vector<Coord>(e.matrix.data().begin(), e.matrix.data().end()));
		elements.push_back(Json{{"length", e.length}, {"word", std::move(word)}, {"matrix", std::move(matrix)}});
		bruhat.push_back(row_to_hex(g.bruhat_row(w)));
	}
	return Json{{"format_version", kGroupCacheVersion},
	            {"type", d.name()},
	            {"rank", d.rank()},
	            {"cartan", std::move(cartan)},
	            {"order", g.size()},
	            {"elements", std::move(elements)},
	            {"bruhat", std::move(bruhat)}};
}

WeylGroup group_from_json(const RootDatum &d, const Json &j)
{
	try
	{
		if (j.at("format_version").get<int>() != kGroupCacheVersion)
			throw InputError("group cache format version mismatch");
		if (j.at("type").get<std::string>() != d.name() || j.at("rank").get<std::size_t>() != d.rank())
			throw InputError("group cache is for a different type");
		const auto &cartan = j.at("cartan");
		for (std::size_t i = 0; i < d.rank(); ++i)
			for (std::size_t k = 0; k < d.rank(); ++k)
				if (cartan.at(i).at(k).get<Coord>() != d.cartan()(i, k))
					throw InputError("group cache has a different Cartan matrix");

		std::vector<WeylElement> elements;
		for (const auto &e : j.at("elements"))
		{
			WeylElement el;
			el.length = e.at("length").get<std::size_t>();
			for (const auto &i : e.at("word"))
			{
				const auto letter = i.get<std::size_t>();
				if (letter == 0 || letter > d.rank())
					throw InputError("group cache word letter out of range");
				el.reduced_word.push_back(letter - 1);
			}
			const auto &m = e.at("matrix");
			if (m.size() != d.rank() * d.rank() || el.reduced_word.size() != el.length)
				throw InputError("group cache element has the wrong shape");
			el.matrix = IntMatrix(d.rank(), d.rank());
			for (std::size_t k = 0; k < m.size(); ++k)
				el.matrix(k / d.rank(), k % d.rank()) = m[k].get<Coord>();
			elements.push_back(std::move(el));
		}
		if (elements.size() != j.at("order").get<std::size_t>())
			throw InputError("group cache order mismatch");

		std::vector<std::vector<std::uint64_t>> rows;
		for (const auto &r : j.at("bruhat"))
			rows.push_back(row_from_hex(r.get<std::string>()));
		return WeylGroup::from_parts(d, std::move(elements), std::move(rows));
	}
	catch (const nlohmann::json::exception &e)
	{
		throw InputError(std::string("malformed group cache: ") + e.what());
	}
}

std::filesystem::path group_cache_path(const std::filesystem::path &dir, const RootDatum &d)
{
	return dir / ("weyl-" + d.name() + "-v" + std::to_string(kGroupCacheVersion) + ".json");
}

WeylGroup load_or_generate(const RootDatum &d, const GroupOptions &options, const std::filesystem::path &dir)
{
	if (dir.empty())
		return WeylGroup::generate(d, options);

	const auto path = group_cache_path(dir, d);
	if (std::filesystem::exists(path))
	{
		try
		{
			std::ifstream in(path);
			Json j = Json::parse(in);
			if (j.at("order").get<std::size_t>() > options.max_order)
				throw LimitError("cached Weyl group of " + d.name() + " exceeds configured maximum order " +
				                 std::to_string(options.max_order));
			return group_from_json(d, j);
		}
		catch (const LimitError &)
		{
			throw;
		}
		catch (const std::exception &)
		{
			// unreadable or stale: regenerate below
		}
	}

	WeylGroup g = WeylGroup::generate(d, options);
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (!ec)
	{
		auto tmp = path;
		tmp += ".tmp";
		{
			std::ofstream out(tmp);
			out << group_to_json(g).dump();
		}
		std::filesystem::rename(tmp, path, ec);
	}
	return g;
}

} // namespace demchar
