#pragma once

#include "demchar/charring.hpp"
#include "demchar/parallel.hpp"
#include "demchar/weyl.hpp"

#include <span>
#include <vector>

namespace demchar {

/// The Demazure operator D_i, extended linearly from its value on monomials.
/// With t = <lambda, alpha_i^vee>:
///   t >= 0   : e^lambda + e^{lambda - alpha_i} + ... + e^{lambda - t alpha_i}
///   t == -1  : 0
///   t <= -2  : -(e^{lambda + alpha_i} + ... + e^{lambda + (-t-1) alpha_i})
/// which is the closed form of (e^lambda - e^{s_i(lambda) - alpha_i}) / (1 - e^{-alpha_i}).
CharElement demazure_step(const RootDatum &d, std::size_t i, const CharElement &v);

/// D_{i1} D_{i2} ... D_{in} (v): the last letter acts first.
CharElement demazure_word(const RootDatum &d, std::span<const std::size_t> word, const CharElement &v);

/// Character of H^0(X(tau), L_lambda) for dominant lambda, via the canonical
/// reduced word of tau.
CharElement demazure_char(const WeylGroup &g, ElementId tau, const Weight &lambda);

/// Euler characteristic sum_i (-1)^i char H^i(X(w), L_mu), any mu.
CharElement euler_char(const WeylGroup &g, ElementId w, const Weight &mu);

/// Character of H^{l(w)}(X(w), L_{-lambda}), the only nonzero cohomology for
/// regular dominant lambda: (-1)^{l(w)} D_w(e^{-lambda}).
CharElement top_cohomology_char(const WeylGroup &g, ElementId w, const Weight &lambda);

/// Euler characteristics of e^mu for every element, indexed by ElementId.
/// Each entry is one operator step from a shorter element: for the first
/// letter s of w's canonical word, D_w = D_s D_{s w}. Elements of equal
/// length are independent and are evaluated concurrently in parallel mode.
std::vector<CharElement> euler_char_table(const WeylGroup &g, const Weight &mu,
                                          Execution exec = Execution::serial);

/// Top cohomology characters for every element and a fixed regular dominant
/// lambda.
class TopCohomologyTable
{
public:
	TopCohomologyTable(const WeylGroup &g, const Weight &lambda, Execution exec = Execution::serial);

	const Weight &lambda() const { return lambda_; }
	const CharElement &operator[](ElementId w) const { return chars_.at(w); }
	std::size_t size() const { return chars_.size(); }

private:
	Weight lambda_;
	std::vector<CharElement> chars_;
};

} // namespace demchar
