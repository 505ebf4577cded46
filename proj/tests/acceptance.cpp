// Acceptance suite: one line per criterion, exact equality throughout.
// Exit status is nonzero if any criterion fails.

#include "demchar/cli.hpp"
#include "demchar/demazure.hpp"
#include "demchar/kernel.hpp"
#include "demchar/theorem.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace demchar;

namespace {

using TypeList = std::vector<std::pair<Family, std::size_t>>;

const TypeList kSweepTypes = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                              {Family::B, 2}, {Family::B, 3}, {Family::G, 2}};

constexpr std::uint64_t kSeed = 20260101;

/// Collects failures with enough context to reproduce them.
struct Tally
{
	std::size_t checks = 0;
	std::vector<std::string> failures;

	void expect(bool ok, const std::function<std::string()> &what)
	{
		++checks;
		if (!ok && failures.size() < 5)
			failures.push_back(what());
		else if (!ok)
			failures.emplace_back();
	}
};

WeylGroup group(Family f, std::size_t n)
{
	return WeylGroup::generate(build_datum(f, n));
}

CharElement e(const Weight &w) { return CharElement::monomial(w); }

/// {1,2}^r followed by five seeded random regular dominant weights with
/// coordinates at most 5. Draws may repeat grid points; rank 1 has only
/// five candidates in total.
std::vector<Weight> sweep_weights(std::size_t rank, std::mt19937_64 &rng)
{
	auto out = regular_dominant_grid(rank, 2);
	for (int k = 0; k < 5; ++k)
		out.push_back(gen::random_regular(rng, rank, 5));
	return out;
}

std::string where(const WeylGroup &g, ElementId w, const Weight &lambda)
{
	return g.datum().name() + " w=" + format_word(g.word(w)) + " lambda=" + lambda.str();
}

Tally identity_sweep()
{
	Tally t;
	std::mt19937_64 rng(kSeed);
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		for (const auto &lambda : sweep_weights(n, rng))
		{
			const TopCohomologyTable table(g, lambda, Execution::parallel);
			std::vector<char> ok(g.size());
			for_each_index(g.size(), Execution::parallel, [&](std::size_t tau) {
				const auto id = static_cast<ElementId>(tau);
				ok[tau] = theorem_lhs(g, id, lambda, &table) == theorem_rhs(g, id, lambda);
			});
			for (ElementId tau = 0; tau < g.size(); ++tau)
				t.expect(ok[tau], [&] { return "identity fails at " + where(g, tau, lambda); });
		}
	}
	return t;
}

Tally epsilon_sweep()
{
	Tally t;
	std::mt19937_64 rng(kSeed);
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		const auto &d = g.datum();
		for (const auto &lambda : sweep_weights(n, rng))
		{
			const TopCohomologyTable table(g, lambda, Execution::parallel);
			std::vector<CharElement> eps(g.size());
			for (ElementId w = 0; w < g.size(); ++w)
			{
				eps[w] = epsilon_from_top(d, table[w]);
				t.expect(eps[w].nonnegative(), [&] { return "negative coefficient in eps at " + where(g, w, lambda); });
				// eps_w = 0 exactly when w has a right descent s_i with pairing 1
				t.expect(eps[w].is_zero() == oracle::has_unit_right_descent(g, w, lambda),
				         [&] { return "unexpected vanishing pattern at " + where(g, w, lambda); });
				if (eps[w].is_zero())
					continue;
				const auto low = extreme_weight(d, eps[w], Extreme::lowest);
				const Weight expected = apply(g, w, lambda - d.rho());
				t.expect(low && *low == expected && eps[w].coefficient(expected) == 1,
				         [&] { return "lowest weight of eps is not w(lambda - rho) at " + where(g, w, lambda); });
			}
			std::vector<char> ok(g.size());
			for_each_index(g.size(), Execution::parallel, [&](std::size_t tau) {
				CharElement sum(n);
				for (ElementId w : g.lower_interval(static_cast<ElementId>(tau)))
					sum += eps[w];
				ok[tau] = sum == demazure_char(g, static_cast<ElementId>(tau), lambda - d.rho());
			});
			for (ElementId tau = 0; tau < g.size(); ++tau)
				t.expect(ok[tau], [&] { return "sum of eps differs from h0 at " + where(g, tau, lambda); });
		}
	}
	return t;
}

Tally operator_laws()
{
	Tally t;
	std::mt19937_64 rng(kSeed + 3);
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		const auto &d = g.datum();
		for (int trial = 0; trial < 100; ++trial)
		{
			CharElement v = gen::random_char(rng, n, 5, 4);
			if (trial % 4 == 0)
			{
				// make sure the fixed side of the characterization is exercised
				const std::size_t i = static_cast<std::size_t>(trial / 4) % n;
				v += w_apply(g, g.left_multiply(i, g.identity()), v);
			}
			for (std::size_t i = 0; i < n; ++i)
			{
				const auto once = demazure_step(d, i, v);
				t.expect(demazure_step(d, i, once) == once,
				         [&] { return d.name() + " D_" + std::to_string(i + 1) + " not idempotent on " + to_string(v); });
				const bool fixed = once == v;
				const bool symmetric = w_apply(g, g.left_multiply(i, g.identity()), v) == v;
				t.expect(fixed == symmetric,
				         [&] { return d.name() + " fixed-point characterization fails on " + to_string(v); });
			}
			const Weight lambda = oracle::random_weight(rng, n, -8, 8);
			for (std::size_t i = 0; i < n; ++i)
			{
				const Weight &alpha = d.simple_root(i);
				const CharElement lhs = (e(Weight(n)) - e(-alpha)) * demazure_step(d, i, e(lambda));
				t.expect(lhs == e(lambda) - e(simple_reflection(d, i, lambda) - alpha),
				         [&] { return d.name() + " numerator identity fails at " + lambda.str(); });
			}
		}
	}

	for (const auto &[f, n] : TypeList{{Family::A, 3}, {Family::B, 2}})
	{
		const auto g = group(f, n);
		for (ElementId w = 0; w < g.size(); ++w)
		{
			const auto words = g.alternative_reduced_words(w, 1000);
			if (words.size() < 2)
				continue;
			for (int trial = 0; trial < 3; ++trial)
			{
				const auto v = gen::random_char(rng, n, 4, 3);
				const auto reference = demazure_word(g.datum(), words.front(), v);
				for (const auto &word : words)
					t.expect(demazure_word(g.datum(), word, v) == reference,
					         [&] { return g.datum().name() + " D_w depends on the word for " + format_word(word); });
			}
		}
	}
	return t;
}

Tally weyl_dimensions()
{
	Tally t;
	std::mt19937_64 rng(kSeed + 4);
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		for (int trial = 0; trial < 10; ++trial)
		{
			const Weight lambda = gen::random_dominant(rng, n, 4);
			const Integer dim = demazure_char(g, g.longest(), lambda).dimension();
			t.expect(oracle::Rational(dim) == oracle::weyl_dimension(g.datum(), lambda),
			         [&] { return g.datum().name() + " dimension mismatch at " + lambda.str(); });
		}
	}
	const auto a2 = group(Family::A, 2);
	t.expect(demazure_char(a2, a2.longest(), Weight{1, 1}).dimension() == 8, [] { return "A2 (1,1) is not 8"; });
	const auto g2 = group(Family::G, 2);
	const std::set<Integer> fundamental{demazure_char(g2, g2.longest(), Weight{1, 0}).dimension(),
	                                    demazure_char(g2, g2.longest(), Weight{0, 1}).dimension()};
	t.expect(fundamental == std::set<Integer>{7, 14}, [] { return "G2 fundamental dimensions are not {7,14}"; });
	return t;
}

Tally kernel_basis()
{
	Tally t;
	std::mt19937_64 rng(kSeed + 5);
	for (const auto &[f, n] : TypeList{{Family::A, 1}, {Family::A, 2}, {Family::B, 2}})
	{
		const auto g = group(f, n);
		const auto &d = g.datum();
		const auto grid = regular_dominant_grid(n, 3);
		std::vector<CharElement> basis;
		for (const auto &lambda : grid)
		{
			basis.push_back(kernel_basis_element(g, lambda));
			const auto &v = basis.back();
			t.expect(in_kernel(d, v), [&] { return d.name() + " basis element not in N at " + lambda.str(); });
			t.expect(verify_characterization(g, v), [&] { return d.name() + " characterization fails"; });
			t.expect(decompose(g, v) == Decomposition{{basis_weight(g, lambda), 1}},
			         [&] { return d.name() + " basis element does not round-trip at " + lambda.str(); });
		}

		for (int trial = 0; trial < 50; ++trial)
		{
			CharElement v(n);
			Decomposition expected;
			for (std::size_t k = 0; k < grid.size(); ++k)
			{
				const Coord c = oracle::uniform(rng, -3, 3);
				if (c == 0)
					continue;
				v += scale(c, basis[k]);
				expected[basis_weight(g, grid[k])] = c;
			}
			t.expect(verify_characterization(g, v), [&] { return d.name() + " characterization fails on member"; });
			t.expect(decompose(g, v) == expected,
			         [&] { return d.name() + " combination does not round-trip: " + to_string(v); });
		}

		int outsiders = 0;
		while (outsiders < 50)
		{
			CharElement v = basis[static_cast<std::size_t>(outsiders) % basis.size()];
			v += gen::random_char(rng, n, 3, 4);
			if (in_kernel(d, v))
				continue;
			++outsiders;
			t.expect(verify_characterization(g, v), [&] { return d.name() + " characterization fails on " + to_string(v); });
		}
	}
	return t;
}

Tally psi_forced()
{
	Tally t;
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		const auto &d = g.datum();
		t.expect(psi_character(g, g.identity(), chi_prime_identity(d)) == Weight(n),
		         [&] { return d.name() + " psi_e(2 rho) != 0"; });
		t.expect(psi_character(g, g.longest(), chi_prime_longest(d)) == Weight(n),
		         [&] { return d.name() + " psi_w0(0) != 0"; });
	}
	return t;
}

Tally combinatorics()
{
	Tally t;
	const std::vector<std::size_t> orders{2, 6, 24, 8, 48, 12};
	for (std::size_t k = 0; k < kSweepTypes.size(); ++k)
	{
		const auto g = group(kSweepTypes[k].first, kSweepTypes[k].second);
		t.expect(g.size() == orders[k], [&] { return g.datum().name() + " has |W| = " + std::to_string(g.size()); });
		t.expect(g.length(g.longest()) == g.datum().positive_roots().size(),
		         [&] { return g.datum().name() + " l(w0) != |R+|"; });
	}
	for (const auto &[f, n] : TypeList{{Family::A, 3}, {Family::B, 2}})
	{
		const auto g = group(f, n);
		for (ElementId tau = 0; tau < g.size(); ++tau)
		{
			const auto below = oracle::subword_interval(g, tau);
			for (ElementId w = 0; w < g.size(); ++w)
				t.expect(g.bruhat_leq(w, tau) == below.count(w) > 0, [&] {
					return g.datum().name() + " Bruhat mismatch " + format_word(g.word(w)) + " vs " +
					       format_word(g.word(tau));
				});
		}
	}
	return t;
}

Tally nonvanishing()
{
	Tally t;
	for (const auto &[f, n] : kSweepTypes)
	{
		const auto g = group(f, n);
		const auto &d = g.datum();
		const Weight lambda = 2 * d.rho();
		const TopCohomologyTable table(g, lambda, Execution::parallel);
		for (ElementId w = 0; w < g.size(); ++w)
		{
			const auto &top = table[w];
			const Weight expected = apply(g, w, -lambda + d.rho()) - d.rho();
			bool ok = !top.is_zero();
			if (ok)
			{
				const auto high = extreme_weight(d, top, Extreme::highest);
				ok = high && *high == expected && top.coefficient(expected) == 1;
			}
			t.expect(ok, [&] { return "top cohomology is zero or has the wrong highest weight at " + where(g, w, lambda); });
		}
	}
	return t;
}

Tally determinism()
{
	Tally t;
	for (const std::string fmt : {"plain", "json"})
	{
		std::vector<std::string> args{"verify-theorem", "--type", "A3", "--grid", "3", "--format", fmt};
		std::ostringstream serial, parallel, err;
		const int a = cli::run(args, serial, err);
		args.push_back("--parallel");
		const int b = cli::run(args, parallel, err);
		t.expect(a == 0 && b == 0, [&] { return "verify-theorem exited with " + std::to_string(a) + "/" + std::to_string(b); });
		t.expect(serial.str() == parallel.str(), [&] { return fmt + " output differs between serial and parallel"; });
	}
	return t;
}

} // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
	    {"1 identity sum_{w<=tau} h^top(w,-lambda)^* = e^rho h0(tau, lambda-rho), all tau", identity_sweep},
	    {"2 epsilon decomposition, nonnegativity and lowest weights", epsilon_sweep},
	    {"3 Demazure operator laws", operator_laws},
	    {"4 Demazure character dimensions vs Weyl dimension formula", weyl_dimensions},
	    {"5 kernel of the Demazure operators: membership, characterization, decomposition", kernel_basis},
	    {"6 psi twist in the forced cases", psi_forced},
	    {"7 Weyl group orders, Bruhat order, longest length", combinatorics},
	    {"8 top cohomology nonvanishing at lambda = 2 rho", nonvanishing},
	    {"9 serial and parallel verify-theorem output identical (A3)", determinism},
	};

	int failed = 0;
	for (const auto &[name, fn] : criteria)
	{
		const auto start = std::chrono::steady_clock::now();
		Tally t;
		std::string crash;
		try
		{
			t = fn();
		}
		catch (const std::exception &ex)
		{
			crash = ex.what();
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		const bool ok = crash.empty() && t.failures.empty();
		failed += ok ? 0 : 1;

		std::ostringstream line;
		line.setf(std::ios::fixed);
		line.precision(2);
		line << (ok ? "PASS " : "FAIL ") << name << " [" << t.checks << " checks, " << t.failures.size()
		     << " failed, " << secs << "s]";
		std::cout << line.str() << '\n';
		if (!crash.empty())
			std::cout << "    exception: " << crash << '\n';
		for (const auto &f : t.failures)
			if (!f.empty())
				std::cout << "    " << f << '\n';
	}
	std::cout << (failed ? "acceptance: FAILED (" + std::to_string(failed) + " criteria)" : "acceptance: all criteria passed")
	          << '\n';
	return failed ? 1 : 0;
}
