#pragma once

#include "zz/bimodule.hpp"
#include "zz/homalg.hpp"
#include "zz/zigzag.hpp"

namespace zz {

// _aP = e_a A as a (k,A)-bimodule, ready for tensoring against left modules.
Bimodule right_projective_bimodule(const AlgebraPtr& a_alg, int a);

// X (x)_A M for a (B,A)-bimodule X and left A-module M, as a left B-module.
Module tensor_over_algebra(const Bimodule& x, const Module& m);

// A as a left module over itself.
Module regular_module(const AlgebraPtr& a);

// quotient of M by its radical (positive-degree span of the image of the
// positive part acting on everything): for our graded algebras the radical of
// a module generated in its lowest degrees is the span of all positive-action
// images.
Module top_of(const Module& m);

// The indecomposable graded modules of the zigzag algebra of the chain A_n:
// interval representations of both sink-source orientations extended by zero,
// with simples at sources promoted to projectives. Exactly n^2+n modules.
std::vector<Module> typeA_indecomposables(int n);
std::vector<Module> typeA_indecomposables(const AlgebraPtr& a, const Graph& g);

// deterministic pseudo-random quotients of sums of shifted projectives
std::vector<Module> random_quotient_modules(const AlgebraPtr& a, int count, int maxdim,
                                            uint64_t seed);

// does M occur in the list up to a grading shift?
bool matches_up_to_shift(const Module& m, const std::vector<Module>& list);

} // namespace zz
