#pragma once

#include <vector>

#include "orbi/burnside.hpp"
#include "orbi/chenruan.hpp"
#include "orbi/gspace.hpp"

namespace orbi {

/// The data-parallel loops, each with an OpenMP version and the serial
/// reference it must agree with.
enum class Exec { Serial, Parallel };

/// Caps the OpenMP team size (0: runtime default).
void set_thread_cap(int threads);
int thread_cap();

namespace kernels {

/// Invariant dimensions per sector (character averaging).
std::vector<SectorContribution> sector_contributions(const GSpace& S, const Cocycle* alpha, Exec exec);

/// sum over commuting pairs (g, h) of chi(Y^g cap Y^h), not yet divided by |G|.
long commuting_pair_euler_sum(const GSpace& S, Exec exec);

/// Blow-up relation rows for every symbol of the universe and every k,
/// applied with every k-sub-multiset moved to the front. Row order is
/// deterministic (symbol order, then k, then sub-multiset).
std::vector<SparseRow> relation_rows(const FiniteGroup& G, const std::vector<Symbol>& universe, int d,
                                     Exec exec);

}  // namespace kernels

}  // namespace orbi
