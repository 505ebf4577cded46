#pragma once

#include "demchar/charring.hpp"
#include "demchar/parallel.hpp"
#include "demchar/weyl.hpp"

#include <map>

namespace demchar {

/// v lies in N, the common kernel of all D_i.
bool in_kernel(const RootDatum &d, const CharElement &v);

/// D_i(v) = v for every i.
bool is_demazure_invariant(const RootDatum &d, const CharElement &v);

/// sum over all w in W of h^{l(w)}(w, -lambda), lambda regular dominant.
CharElement kernel_basis_element(const WeylGroup &g, const Weight &lambda, Execution exec = Execution::serial);

/// Checks in_kernel(v) <=> is_demazure_invariant(e^rho v); false means v is
/// a counterexample to that characterization of N.
bool verify_characterization(const WeylGroup &g, const CharElement &v);

/// Coefficients c_mu with e^rho v = sum c_mu h^0(w0, mu), mu dominant.
using Decomposition = std::map<Weight, Integer>;

/// Greedy triangular extraction of dominance-maximal weights. Throws
/// InputError if v is not in N and ConsistencyError if e^rho v turns out not
/// to be W-invariant or the extraction stops making progress.
Decomposition decompose(const WeylGroup &g, const CharElement &v);

/// The regular dominant lambda whose kernel_basis_element equals
/// e^{-rho} h^0(w0, mu): lambda = -w0(mu) + rho.
Weight basis_label(const WeylGroup &g, const Weight &mu);

/// Inverse of basis_label: mu = -w0(lambda - rho).
Weight basis_weight(const WeylGroup &g, const Weight &lambda);

} // namespace demchar
