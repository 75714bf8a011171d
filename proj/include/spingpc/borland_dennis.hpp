#pragma once

#include "spingpc/fock.hpp"
#include "spingpc/rational.hpp"

namespace spingpc {

/// The three-configuration quasipinned family in (N=3, d=3, S=M=1/2):
///   sqrt(2/3 - eps^2) |1u 1d 2u> + sqrt(1/3) |2u 2d 3u> + eps |1u 3u 3d>.
/// include_generic adds a small deterministic eps^2 admixture of the
/// remaining sector basis states (the exact residual table below applies
/// only to the pure three-term instance). Requires eps^2 < 2/3.
SectorState borland_dennis_state(const Rat& epsilon, bool include_generic = false);

/// Exact rational residual table of the three-term state. The configurations
/// differ pairwise by two orbital moves, so both reduced density matrices are
/// diagonal and every entry follows in closed form.
struct BdExactTable {
  Rat epsilon;
  RatVec orbital_spectrum;       // descending, length 3
  RatVec spin_orbital_spectrum;  // descending, length 6
  Rat d_spin_independent;        // l5 + l6 - l4 on the spin-orbital spectrum
  Rat x1;                        // 3 - l1 - l2 - l3          (spin-orbital)
  Rat x2;                        // 1 - l1                    (spin-orbital)
  Rat d1;                        // 1 - l1 + l2               (orbital)
  Rat d2;                        // 1 - l2 + l3               (orbital)
  Rat x1_orbital;                // 2 - l1                    (orbital)
  Rat x2_orbital;                // 3 - l1 - l2               (orbital)
};

BdExactTable borland_dennis_exact_table(const Rat& epsilon);

/// Diagnostic for the natural-spin-orbital compatibility condition of
/// three-electron states: the three cross-channel overlap magnitudes
/// a = sqrt(l_1d) |<3|1~>|, b = sqrt(l_2d) |<2|2~>|, c = sqrt(l_3d) |<1|3~>|
/// admit phases summing to zero iff they satisfy the triangle condition.
/// Returns the defect max(0, 2*max(a,b,c) - (a+b+c)); 0 means satisfiable.
double bd_phase_condition_defect(const SectorState& psi);

}  // namespace spingpc
