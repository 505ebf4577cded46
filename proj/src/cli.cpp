#include "demchar/cli.hpp"

#include "demchar/demazure.hpp"
#include "demchar/errors.hpp"
#include "demchar/kernel.hpp"
#include "demchar/theorem.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

namespace demchar::cli {

namespace {

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"info", "Cartan matrix, rho, positive roots, |W| and w0"},
    {"weyl", "List the Weyl group elements with lengths, words and matrices"},
    {"demchar", "Demazure character D_tau(e^mu) for dominant --mu"},
    {"topchar", "Top cohomology character of L_{-lambda} on X(w)"},
    {"euler", "Euler characteristic D_w(e^mu) for any --mu"},
    {"verify-theorem", "Check the h^top / h0 identity for every tau over a lambda grid"},
    {"verify-lemma31", "Check that the epsilon characters sum to h0(tau, lambda - rho)"},
    {"verify-kernel", "Check membership, characterization and decomposition in the kernel"},
    {"decompose", "Write an element of the kernel in the h0(w0, mu) basis"},
    {"bruhat", "Bruhat comparison, lower intervals or the Hasse diagram"},
};

struct Context
{
	const RunConfig &cfg;
	WeylGroup group;
	Execution exec;
	std::ostream &out;
	std::ostream &err;

	bool json() const { return cfg.format == "json"; }
	const RootDatum &datum() const { return group.datum(); }
};

Weight require_weight(const Context &ctx, const std::optional<std::vector<Coord>> &coords, const char *flag)
{
	if (!coords)
		throw InputError(std::string("missing required option ") + flag);
	if (coords->size() != ctx.datum().rank())
		throw InputError(std::string(flag) + " needs " + std::to_string(ctx.datum().rank()) + " coordinates");
	return Weight(std::span<const Coord>(*coords));
}

ElementId select(const Context &ctx, const std::optional<std::string> &sel)
{
	return parse_element(ctx.group, sel.value_or("w0"));
}

// Portable across standard libraries, unlike std::uniform_int_distribution.
Coord uniform(std::mt19937_64 &rng, Coord lo, Coord hi)
{
	return lo + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CharElement random_element(std::mt19937_64 &rng, std::size_t rank, std::size_t terms, Coord box)
{
	CharElement v(rank);
	for (std::size_t k = 0; k < terms; ++k)
	{
		Weight mu(rank);
		for (std::size_t i = 0; i < rank; ++i)
			mu[i] = uniform(rng, -box, box);
		v.add_term(mu, Integer(uniform(rng, -3, 3)));
	}
	return v;
}

void print_char(const Context &ctx, Json header, const CharElement &v)
{
	if (ctx.json())
	{
		header["dimension"] = v.dimension().str();
		header["character"] = char_to_json(v);
		ctx.out << header.dump(2) << '\n';
		return;
	}
	for (const auto &[key, value] : header.items())
		ctx.out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
	ctx.out << "dimension: " << v.dimension() << '\n';
	ctx.out << "terms: " << v.size() << '\n';
	ctx.out << v << '\n';
}

int cmd_info(Context &ctx)
{
	const RootDatum &d = ctx.datum();
	const WeylGroup &g = ctx.group;
	if (ctx.json())
	{
		Json roots = Json::array();
		for (const auto &beta : d.positive_roots())
			roots.push_back(weight_to_json(beta));
		Json cartan = Json::array();
		for (std::size_t i = 0; i < d.rank(); ++i)
		{
			Json row = Json::array();
			for (std::size_t k = 0; k < d.rank(); ++k)
				row.push_back(d.cartan()(i, k));
			cartan.push_back(std::move(row));
		}
		Json j{{"type", d.name()},
		       {"rank", d.rank()},
		       {"weyl_order", g.size()},
		       {"positive_roots_count", d.positive_roots().size()},
		       {"cartan", std::move(cartan)},
		       {"rho", weight_to_json(d.rho())},
		       {"w0", format_word(g.word(g.longest()))},
		       {"w0_length", g.length(g.longest())},
		       {"positive_roots", std::move(roots)}};
		ctx.out << j.dump(2) << '\n';
		return kVerified;
	}
	ctx.out << "type: " << d.name() << '\n';
	ctx.out << "rank: " << d.rank() << '\n';
	ctx.out << "|W|: " << g.size() << '\n';
	ctx.out << "|R+|: " << d.positive_roots().size() << '\n';
	ctx.out << "cartan:\n";
	for (std::size_t i = 0; i < d.rank(); ++i)
	{
		ctx.out << "  [";
		for (std::size_t k = 0; k < d.rank(); ++k)
			ctx.out << (k ? ", " : "") << d.cartan()(i, k);
		ctx.out << "]\n";
	}
	ctx.out << "rho: " << d.rho() << '\n';
	ctx.out << "w0: " << format_word(g.word(g.longest())) << " (length " << g.length(g.longest()) << ")\n";
	ctx.out << "positive roots:";
	for (const auto &beta : d.positive_roots())
		ctx.out << ' ' << beta;
	ctx.out << '\n';
	return kVerified;
}

int cmd_weyl(Context &ctx)
{
	const WeylGroup &g = ctx.group;
	if (ctx.json())
	{
		ctx.out << group_to_json(g).dump() << '\n';
		return kVerified;
	}
	for (ElementId w = 0; w < g.size(); ++w)
	{
		ctx.out << w << " l=" << g.length(w) << " word=" << format_word(g.word(w)) << " matrix=[";
		const auto data = g.element(w).matrix.data();
		for (std::size_t k = 0; k < data.size(); ++k)
			ctx.out << (k ? "," : "") << data[k];
		ctx.out << "]\n";
	}
	return kVerified;
}

int cmd_bruhat(Context &ctx)
{
	const WeylGroup &g = ctx.group;
	if (ctx.cfg.dot)
	{
		ctx.out << "digraph bruhat {\n  rankdir=BT;\n";
		for (ElementId w = 0; w < g.size(); ++w)
			ctx.out << "  n" << w << " [label=\"" << format_word(g.word(w)) << "\"];\n";
		for (ElementId tau = 0; tau < g.size(); ++tau)
			for (ElementId w = 0; w < g.size(); ++w)
				if (g.length(w) + 1 == g.length(tau) && g.bruhat_leq(w, tau))
					ctx.out << "  n" << w << " -> n" << tau << ";\n";
		ctx.out << "}\n";
		return kVerified;
	}

	const ElementId tau = select(ctx, ctx.cfg.tau);
	if (ctx.cfg.w)
	{
		const ElementId w = parse_element(g, *ctx.cfg.w);
		const bool leq = g.bruhat_leq(w, tau);
		if (ctx.json())
			ctx.out << Json{{"w", format_word(g.word(w))}, {"tau", format_word(g.word(tau))}, {"leq", leq}}.dump(2)
			        << '\n';
		else
			ctx.out << format_word(g.word(w)) << (leq ? " <= " : " !<= ") << format_word(g.word(tau)) << '\n';
		return kVerified;
	}

	const auto interval = g.lower_interval(tau);
	if (ctx.json())
	{
		Json words = Json::array();
		for (ElementId w : interval)
			words.push_back(format_word(g.word(w)));
		ctx.out << Json{{"tau", format_word(g.word(tau))}, {"size", interval.size()}, {"interval", std::move(words)}}
		               .dump(2)
		        << '\n';
		return kVerified;
	}
	ctx.out << "lower interval of " << format_word(g.word(tau)) << " (" << interval.size() << " elements):\n";
	for (ElementId w : interval)
		ctx.out << "  " << format_word(g.word(w)) << '\n';
	return kVerified;
}

int cmd_demchar(Context &ctx)
{
	const ElementId tau = select(ctx, ctx.cfg.tau);
	const Weight mu = require_weight(ctx, ctx.cfg.mu, "--mu");
	const CharElement v = demazure_char(ctx.group, tau, mu);
	print_char(ctx, Json{{"tau", format_word(ctx.group.word(tau))}, {"mu", mu.str()}}, v);
	return kVerified;
}

int cmd_topchar(Context &ctx)
{
	const ElementId w = select(ctx, ctx.cfg.w);
	const Weight lambda = require_weight(ctx, ctx.cfg.lambda, "--lambda");
	const CharElement v = top_cohomology_char(ctx.group, w, lambda);
	print_char(ctx, Json{{"w", format_word(ctx.group.word(w))}, {"lambda", lambda.str()}}, v);
	return kVerified;
}

int cmd_euler(Context &ctx)
{
	const ElementId w = select(ctx, ctx.cfg.w);
	const Weight mu = require_weight(ctx, ctx.cfg.mu, "--mu");
	const CharElement v = euler_char(ctx.group, w, mu);
	print_char(ctx, Json{{"w", format_word(ctx.group.word(w))}, {"mu", mu.str()}}, v);
	return kVerified;
}

std::vector<Weight> lambda_set(const Context &ctx)
{
	if (ctx.cfg.lambda)
	{
		Weight lambda = require_weight(ctx, ctx.cfg.lambda, "--lambda");
		if (!is_regular_dominant(lambda))
			throw InputError("--lambda must be regular dominant, got " + lambda.str());
		return {lambda};
	}
	if (ctx.cfg.grid < 1)
		throw InputError("--grid must be at least 1");
	return regular_dominant_grid(ctx.datum().rank(), ctx.cfg.grid);
}

std::vector<ElementId> tau_set(const Context &ctx)
{
	if (ctx.cfg.tau)
		return {parse_element(ctx.group, *ctx.cfg.tau)};
	std::vector<ElementId> all(ctx.group.size());
	for (ElementId w = 0; w < all.size(); ++w)
		all[w] = w;
	return all;
}

// Runs the requested identity checks over the tau x lambda sweep.
int sweep(Context &ctx, bool theorem, bool lemma)
{
	const WeylGroup &g = ctx.group;
	const auto lambdas = lambda_set(ctx);
	const auto taus = tau_set(ctx);

	std::size_t checks = 0;
	std::size_t passed = 0;
	std::optional<VerificationReport> first_failure;
	Json per_lambda = Json::array();

	const std::string name = theorem ? "verify-theorem" : "verify-lemma31";
	if (!ctx.json())
		ctx.out << name << ' ' << ctx.datum().name() << ": " << taus.size() << " tau x " << lambdas.size()
		        << " lambda\n";

	for (const auto &lambda : lambdas)
	{
		const TopCohomologyTable table(g, lambda, ctx.exec);
		const VerifyOptions opts{&table, false};
		const std::size_t per_tau = (theorem ? 1 : 0) + (lemma ? 1 : 0);
		std::vector<VerificationReport> reports(taus.size() * per_tau);
		for_each_index(taus.size(), ctx.exec, [&](std::size_t k) {
			std::size_t slot = k * per_tau;
			if (theorem)
				reports[slot++] = verify_theorem(g, taus[k], lambda, opts);
			if (lemma)
				reports[slot] = verify_lemma31(g, taus[k], lambda, opts);
		});

		std::size_t ok = 0;
		for (auto &r : reports)
		{
			if (r.passed)
				++ok;
			else if (!first_failure)
				first_failure = std::move(r);
		}
		checks += reports.size();
		passed += ok;
		if (ctx.json())
			per_lambda.push_back(Json{{"lambda", weight_to_json(lambda)}, {"checks", reports.size()}, {"passed", ok}});
		else
			ctx.out << "lambda=" << lambda << ": " << ok << '/' << reports.size() << " passed\n";
	}

	if (ctx.json())
	{
		Json j{{"command", name},
		       {"type", ctx.datum().name()},
		       {"checks", checks},
		       {"passed", passed},
		       {"failed", checks - passed},
		       {"per_lambda", std::move(per_lambda)}};
		if (first_failure)
			j["first_failure"] = report_to_json(*first_failure);
		ctx.out << j.dump(2) << '\n';
	}
	else
	{
		ctx.out << "checks: " << checks << ", passed: " << passed << ", failed: " << checks - passed << '\n';
		if (first_failure)
			ctx.out << "first counterexample:\n" << report_to_json(*first_failure).dump(2) << '\n';
	}
	return first_failure ? kMismatch : kVerified;
}

int cmd_verify_kernel(Context &ctx)
{
	const WeylGroup &g = ctx.group;
	const auto lambdas = lambda_set(ctx);
	std::size_t checks = 0;
	std::vector<std::string> failures;
	auto record = [&](bool ok, const std::string &what) {
		++checks;
		if (!ok)
			failures.push_back(what);
	};

	std::vector<CharElement> basis(lambdas.size());
	for_each_index(lambdas.size(), ctx.exec, [&](std::size_t k) { basis[k] = kernel_basis_element(g, lambdas[k]); });

	for (std::size_t k = 0; k < lambdas.size(); ++k)
	{
		const auto &lambda = lambdas[k];
		const std::string tag = "lambda=" + lambda.str();
		record(in_kernel(g.datum(), basis[k]), tag + ": basis element not in kernel");
		record(verify_characterization(g, basis[k]), tag + ": characterization fails");
		bool round_trip = false;
		try
		{
			const Decomposition dec = decompose(g, basis[k]);
			round_trip = dec == Decomposition{{basis_weight(g, lambda), Integer(1)}};
		}
		catch (const std::exception &)
		{}
		record(round_trip, tag + ": decomposition round trip failed");
	}

	std::mt19937_64 rng(ctx.cfg.seed);
	for (std::size_t s = 0; s < ctx.cfg.samples && !basis.empty(); ++s)
	{
		CharElement v(g.rank());
		Decomposition expected;
		for (std::size_t k = 0; k < basis.size(); ++k)
		{
			const Coord c = uniform(rng, -3, 3);
			if (c == 0)
				continue;
			v += scale(Integer(c), basis[k]);
			expected[basis_weight(g, lambdas[k])] = c;
		}
		const std::string tag = "sample " + std::to_string(s);
		record(verify_characterization(g, v), tag + ": characterization fails on member");
		bool round_trip = false;
		try
		{
			round_trip = decompose(g, v) == expected;
		}
		catch (const std::exception &)
		{}
		record(round_trip, tag + ": combination round trip failed");

		const CharElement outsider = random_element(rng, g.rank(), 1 + s % 6, 4);
		record(verify_characterization(g, outsider), tag + ": characterization fails on random element");
	}

	if (ctx.json())
	{
		Json j{{"command", "verify-kernel"},
		       {"type", ctx.datum().name()},
		       {"checks", checks},
		       {"passed", checks - failures.size()},
		       {"failed", failures.size()},
		       {"failures", failures}};
		ctx.out << j.dump(2) << '\n';
	}
	else
	{
		ctx.out << "verify-kernel " << ctx.datum().name() << ": " << lambdas.size() << " basis elements, "
		        << ctx.cfg.samples << " random samples\n";
		ctx.out << "checks: " << checks << ", passed: " << checks - failures.size() << ", failed: " << failures.size()
		        << '\n';
		for (const auto &f : failures)
			ctx.out << "  " << f << '\n';
	}
	return failures.empty() ? kVerified : kMismatch;
}

int cmd_decompose(Context &ctx)
{
	const WeylGroup &g = ctx.group;
	CharElement v(g.rank());
	if (!ctx.cfg.input.empty())
	{
		Json j;
		try
		{
			if (ctx.cfg.input == "-")
				j = Json::parse(std::cin);
			else
			{
				std::ifstream in(ctx.cfg.input);
				if (!in)
					throw InputError("cannot open " + ctx.cfg.input);
				j = Json::parse(in);
			}
		}
		catch (const nlohmann::json::exception &e)
		{
			throw InputError(std::string("malformed JSON input: ") + e.what());
		}
		v = char_from_json(j);
	}
	else if (ctx.cfg.lambda)
		v = kernel_basis_element(g, require_weight(ctx, ctx.cfg.lambda, "--lambda"), ctx.exec);
	else
		throw InputError("decompose needs --input <file> or --lambda");

	const Decomposition dec = decompose(g, v);
	if (ctx.json())
	{
		ctx.out << decomposition_to_json(g, dec).dump(2) << '\n';
		return kVerified;
	}
	ctx.out << "decomposition of e^rho*v into h0(w0, mu), " << dec.size() << " terms:\n";
	for (const auto &[mu, c] : dec)
		ctx.out << "  mu=" << mu << " lambda=" << basis_label(g, mu) << " coeff=" << c << '\n';
	return kVerified;
}

void apply_type(RunConfig &cfg, const std::string &type, std::size_t rank_flag, bool rank_given)
{
	if (type.empty())
		throw InputError("--type is required");
	cfg.family = static_cast<char>(parse_family(type[0]));
	if (type.size() > 1)
	{
		const auto coords = parse_coords(type.substr(1));
		if (coords.size() != 1 || coords[0] < 1)
			throw InputError("bad type '" + type + "'");
		cfg.rank = static_cast<std::size_t>(coords[0]);
		if (rank_given && rank_flag != cfg.rank)
			throw InputError("--rank disagrees with --type " + type);
	}
	else if (rank_given)
		cfg.rank = rank_flag;
	else
		throw InputError("--rank is required with a bare family letter");
}

} // namespace

std::vector<Coord> parse_coords(const std::string &text)
{
	std::vector<Coord> out;
	std::size_t pos = 0;
	while (pos <= text.size())
	{
		const std::size_t comma = std::min(text.find(',', pos), text.size());
		std::string tok = text.substr(pos, comma - pos);
		tok.erase(0, tok.find_first_not_of(' '));
		tok.erase(tok.find_last_not_of(' ') + 1);
		try
		{
			std::size_t used = 0;
			const long long v = std::stoll(tok, &used);
			if (used != tok.size())
				throw InputError("");
			out.push_back(v);
		}
		catch (const std::exception &)
		{
			throw InputError("bad coordinate list '" + text + "'");
		}
		pos = comma + 1;
	}
	return out;
}

Json config_to_json(const RunConfig &cfg)
{
	auto opt_coords = [](const std::optional<std::vector<Coord>> &c) { return c ? Json(*c) : Json(nullptr); };
	auto opt_str = [](const std::optional<std::string> &s) { return s ? Json(*s) : Json(nullptr); };
	return Json{{"command", cfg.command},
	            {"family", std::string(1, cfg.family)},
	            {"rank", cfg.rank},
	            {"tau", opt_str(cfg.tau)},
	            {"w", opt_str(cfg.w)},
	            {"lambda", opt_coords(cfg.lambda)},
	            {"mu", opt_coords(cfg.mu)},
	            {"grid", cfg.grid},
	            {"format", cfg.format},
	            {"cache_dir", cfg.cache_dir},
	            {"parallel", cfg.parallel},
	            {"max_group_order", cfg.max_group_order},
	            {"seed", cfg.seed},
	            {"samples", cfg.samples},
	            {"input", cfg.input},
	            {"dot", cfg.dot},
	            {"with_lemma31", cfg.with_lemma31}};
}

RunConfig config_from_json(const Json &j)
{
	auto opt_coords = [&](const char *key) -> std::optional<std::vector<Coord>> {
		if (j.at(key).is_null())
			return std::nullopt;
		return j.at(key).get<std::vector<Coord>>();
	};
	auto opt_str = [&](const char *key) -> std::optional<std::string> {
		if (j.at(key).is_null())
			return std::nullopt;
		return j.at(key).get<std::string>();
	};
	try
	{
		RunConfig cfg;
		cfg.command = j.at("command").get<std::string>();
		const auto family = j.at("family").get<std::string>();
		if (family.size() != 1)
			throw InputError("bad family in configuration");
		cfg.family = family[0];
		cfg.rank = j.at("rank").get<std::size_t>();
		cfg.tau = opt_str("tau");
		cfg.w = opt_str("w");
		cfg.lambda = opt_coords("lambda");
		cfg.mu = opt_coords("mu");
		cfg.grid = j.at("grid").get<Coord>();
		cfg.format = j.at("format").get<std::string>();
		cfg.cache_dir = j.at("cache_dir").get<std::string>();
		cfg.parallel = j.at("parallel").get<bool>();
		cfg.max_group_order = j.at("max_group_order").get<std::size_t>();
		cfg.seed = j.at("seed").get<std::uint64_t>();
		cfg.samples = j.at("samples").get<std::size_t>();
		cfg.input = j.at("input").get<std::string>();
		cfg.dot = j.at("dot").get<bool>();
		cfg.with_lemma31 = j.at("with_lemma31").get<bool>();
		return cfg;
	}
	catch (const nlohmann::json::exception &e)
	{
		throw InputError(std::string("malformed configuration: ") + e.what());
	}
}

std::optional<RunConfig> parse_arguments(const std::vector<std::string> &args, std::ostream &out,
                                         std::ostream &err, int &exit_code)
{
	CLI::App app{"Demazure operators, Schubert cohomology characters and their identities"};
	app.name("demchar");
	app.require_subcommand(1, 1);
	app.fallthrough();

	RunConfig cfg;
	if (const char *env = std::getenv(kCacheDirEnv))
		cfg.cache_dir = env;

	std::string type;
	std::size_t rank = 0;
	std::string tau, w, lambda, mu;
	app.add_option("--type", type, "Root system, e.g. A or A2");
	auto *rank_opt = app.add_option("--rank", rank, "Rank when --type is a bare letter");
	auto *tau_opt = app.add_option("--tau", tau, "Element: e, w0 or a word like 1,2,1");
	auto *w_opt = app.add_option("--w", w, "Element: e, w0 or a word like 1,2,1");
	auto *lambda_opt = app.add_option("--lambda", lambda, "Weight in fundamental-weight coordinates, e.g. 2,1");
	auto *mu_opt = app.add_option("--mu", mu, "Weight in fundamental-weight coordinates");
	app.add_option("--grid", cfg.grid, "Sweep every regular dominant weight with coordinates in [1, grid]");
	app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
	app.add_option("--cache-dir", cfg.cache_dir, std::string("Weyl group cache directory (default $") + kCacheDirEnv + ")");
	app.add_flag("--parallel", cfg.parallel, "Evaluate independent terms on all hardware threads");
	app.add_option("--max-group-order", cfg.max_group_order, "Refuse Weyl groups larger than this");
	app.add_option("--seed", cfg.seed, "Seed for randomized checks");
	app.add_option("--samples", cfg.samples, "Random combinations checked by verify-kernel");
	app.add_option("--input", cfg.input, "Character JSON file for decompose ('-' for stdin)");
	app.add_flag("--dot", cfg.dot, "bruhat: emit the Hasse diagram in DOT format");
	app.add_flag("--with-lemma31", cfg.with_lemma31, "verify-theorem: also check the epsilon decomposition");

	for (const auto &[name, description] : kCommands)
		app.add_subcommand(name, description);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try
	{
		app.parse(reversed);
	}
	catch (const CLI::ParseError &e)
	{
		exit_code = app.exit(e, out, err) == 0 ? kVerified : kUsage;
		return std::nullopt;
	}

	try
	{
		cfg.command = app.get_subcommands().front()->get_name();
		apply_type(cfg, type, rank, rank_opt->count() > 0);
		if (tau_opt->count())
			cfg.tau = tau;
		if (w_opt->count())
			cfg.w = w;
		if (lambda_opt->count())
			cfg.lambda = parse_coords(lambda);
		if (mu_opt->count())
			cfg.mu = parse_coords(mu);
	}
	catch (const InputError &e)
	{
		err << "error: " << e.what() << '\n';
		exit_code = kUsage;
		return std::nullopt;
	}
	return cfg;
}

int execute(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	try
	{
		const RootDatum d = build_datum(parse_family(cfg.family), cfg.rank);
		Context ctx{cfg, load_or_generate(d, GroupOptions{cfg.max_group_order}, cfg.cache_dir),
		            cfg.parallel ? Execution::parallel : Execution::serial, out, err};

		const std::string &c = cfg.command;
		if (c == "info")
			return cmd_info(ctx);
		if (c == "weyl")
			return cmd_weyl(ctx);
		if (c == "bruhat")
			return cmd_bruhat(ctx);
		if (c == "demchar")
			return cmd_demchar(ctx);
		if (c == "topchar")
			return cmd_topchar(ctx);
		if (c == "euler")
			return cmd_euler(ctx);
		if (c == "verify-theorem")
			return sweep(ctx, true, cfg.with_lemma31);
		if (c == "verify-lemma31")
			return sweep(ctx, false, true);
		if (c == "verify-kernel")
			return cmd_verify_kernel(ctx);
		if (c == "decompose")
			return cmd_decompose(ctx);
		throw InputError("unknown command '" + c + "'");
	}
	catch (const InputError &e)
	{
		err << "error: " << e.what() << '\n';
		return kUsage;
	}
	catch (const ConsistencyError &e)
	{
		err << "internal inconsistency: " << e.what() << '\n';
		return kMismatch;
	}
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	int code = kVerified;
	auto cfg = parse_arguments(args, out, err, code);
	if (!cfg)
		return code;
	return execute(*cfg, out, err);
}

} // namespace demchar::cli
