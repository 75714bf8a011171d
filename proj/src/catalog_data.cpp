#include "spingpc/catalog.hpp"

namespace spingpc::detail {

// Builtin constraint tables in the external catalog text format, so users can
// dump them (`spingpc catalog --dump`), diff them, and load extended copies.
//
// Rows are written exactly as "a . lambda <leq|geq|eq> b" on decreasingly
// ordered natural orbital occupation numbers. The N=3, S=1/2 family is stable
// under increasing d (rows are zero-padded); blocks up to d=9 are spelled out
// and larger d are padded at lookup time. The N=7, S=3/2, d=6 block is the
// particle-hole image (h_i = 2 - l_{d+1-i}) of the N=5, S=3/2, d=6 block.
const char* builtin_catalog_text() {
  return R"CATALOG(# spin-adapted generalized Pauli constraint tables
# format: setting <N> <d> <2S> | setting-so <N> <2d> | provenance <text> |
#         gpc <b> <a1> ... <ad> <leq|geq|eq>   meaning  a . lambda REL b

setting 3 2 1
provenance builtin N=3 S=1/2 d=2
gpc 2 1 0 eq
gpc 1 0 1 eq

setting 3 3 1
provenance builtin N=3 S=1/2 d=3
gpc 1 1 -1 0 leq
gpc 1 0 1 -1 leq

setting 3 4 1
provenance builtin N=3 S=1/2 d=4
gpc 1 1 -1 0 0 leq
gpc 1 0 1 -1 0 leq

setting 3 5 1
provenance builtin N=3 S=1/2 d=5
gpc 1 1 -1 0 0 0 leq
gpc 1 0 1 -1 0 0 leq

setting 3 6 1
provenance builtin N=3 S=1/2 d=6
gpc 1 1 -1 0 0 0 0 leq
gpc 1 0 1 -1 0 0 0 leq

setting 3 7 1
provenance builtin N=3 S=1/2 d=7
gpc 1 1 -1 0 0 0 0 0 leq
gpc 1 0 1 -1 0 0 0 0 leq

setting 3 8 1
provenance builtin N=3 S=1/2 d=8
gpc 1 1 -1 0 0 0 0 0 0 leq
gpc 1 0 1 -1 0 0 0 0 0 leq

setting 3 9 1
provenance builtin N=3 S=1/2 d=9
gpc 1 1 -1 0 0 0 0 0 0 0 leq
gpc 1 0 1 -1 0 0 0 0 0 0 leq

setting 4 3 2
provenance builtin N=4 S=1 d=3
gpc 2 1 0 0 eq
gpc 1 0 1 0 eq
gpc 1 0 0 1 eq

setting 4 4 2
provenance builtin N=4 S=1 d=4
gpc 1 1 0 -1 0 leq
gpc 1 0 1 0 -1 leq
gpc 3 2 -1 0 1 leq
gpc 3 0 1 2 -1 leq

setting 4 5 2
provenance builtin N=4 S=1 d=5
gpc 1 1 0 -1 0 -1 leq
gpc 1 0 1 0 -1 -1 leq
gpc 3 2 1 -2 -1 0 leq
gpc 3 2 -1 0 1 -2 leq
gpc 3 1 2 -1 -2 0 leq
gpc 3 0 2 1 -2 -1 leq
gpc 3 0 1 2 -1 -2 leq

setting 4 6 2
provenance builtin N=4 S=1 d=6
gpc 1 1 0 -1 0 -1 0 leq
gpc 1 0 1 0 -1 -1 0 leq
gpc 2 1 1 -1 -1 0 0 leq
gpc 2 0 1 1 -1 -1 0 leq
gpc 3 2 -1 0 -1 0 1 leq
gpc 3 2 1 -2 -1 0 -1 leq
gpc 3 2 -1 0 1 -2 -1 leq
gpc 3 1 2 -1 -2 0 -1 leq
gpc 3 0 2 1 -2 -1 -1 leq
gpc 3 0 1 2 -1 -2 -1 leq

setting 4 7 2
provenance builtin N=4 S=1 d=7
gpc 1 1 0 -1 0 -1 0 -1 leq
gpc 1 0 1 0 -1 -1 0 -1 leq
gpc 2 1 1 -1 -1 0 0 0 leq
gpc 2 0 1 1 -1 -1 0 0 leq
gpc 3 2 1 -2 -1 0 -1 0 leq
gpc 3 2 -1 0 1 -2 -1 0 leq
gpc 3 2 -1 0 -1 0 1 -2 leq
gpc 3 1 2 -1 -2 0 -1 0 leq
gpc 3 0 2 1 -2 -1 -1 0 leq
gpc 3 0 1 2 -1 -2 -1 0 leq

setting 4 8 2
provenance builtin N=4 S=1 d=8
gpc 1 1 0 -1 0 -1 0 -1 0 leq
gpc 1 0 1 0 -1 -1 0 -1 0 leq
gpc 2 1 1 -1 -1 0 0 0 0 leq
gpc 2 0 1 1 -1 -1 0 0 0 leq
gpc 3 2 -1 0 -1 0 -1 0 1 leq
gpc 3 2 -1 0 -1 0 1 -2 -1 leq
gpc 3 2 1 -2 -1 0 -1 0 -1 leq
gpc 3 2 -1 0 1 -2 -1 0 -1 leq
gpc 3 1 2 -1 -2 0 -1 0 -1 leq
gpc 3 0 2 1 -2 -1 -1 0 -1 leq
gpc 3 0 1 2 -1 -2 -1 0 -1 leq

setting 5 3 1
provenance builtin N=5 S=1/2 d=3
gpc 2 1 0 0 eq
gpc 2 0 1 0 eq
gpc 1 0 0 1 eq

setting 5 4 1
provenance builtin N=5 S=1/2 d=4
gpc 2 1 0 0 0 leq
gpc 1 0 1 -1 0 leq
gpc 1 0 0 1 -1 leq

setting 5 5 1
provenance builtin N=5 S=1/2 d=5
gpc 2 1 0 0 0 0 leq
gpc 1 0 1 -1 0 -1 leq
gpc 1 0 0 1 -1 -1 leq
gpc 3 1 0 1 -1 0 leq
gpc 3 1 1 -1 0 0 leq

setting 5 6 1
provenance builtin N=5 S=1/2 d=6
gpc 2 1 0 0 0 0 0 leq
gpc 1 0 1 -1 0 -1 -1 leq
gpc 1 0 0 1 -1 -1 -1 leq
gpc 3 1 0 1 -1 0 0 leq
gpc 3 1 1 -1 0 0 0 leq

setting 5 4 3
provenance builtin N=5 S=3/2 d=4
gpc 2 1 0 0 0 eq
gpc 1 0 1 0 0 eq
gpc 1 0 0 1 0 eq
gpc 1 0 0 0 1 eq

setting 5 5 3
provenance builtin N=5 S=3/2 d=5
gpc -1 0 1 -2 -1 0 leq
gpc -1 -1 0 1 0 -2 leq
gpc 0 0 0 1 -1 -1 leq
gpc 0 0 1 -1 0 -1 leq
gpc 0 1 0 -1 -1 0 leq
gpc 1 2 -2 -1 0 1 leq
gpc 1 -1 0 1 2 -2 leq
gpc 2 1 1 -1 0 0 leq
gpc 2 1 0 1 -1 0 leq
gpc 2 0 1 1 0 -1 leq
gpc 3 0 1 2 -1 0 leq
gpc 3 2 0 -1 0 1 leq

setting 5 6 3
provenance builtin N=5 S=3/2 d=6
gpc -1 0 1 -2 -1 0 -3 leq
gpc -1 -1 1 0 0 -3 -2 leq
gpc -1 -1 0 1 0 -2 -3 leq
gpc 0 1 -1 0 -1 0 -1 leq
gpc 1 1 -1 0 0 0 0 leq
gpc 1 0 1 0 0 -1 -1 leq
gpc 1 1 0 0 -1 0 -1 leq
gpc 2 0 1 1 0 -1 -1 leq
gpc 2 1 0 1 -1 0 -1 leq
gpc 2 1 1 0 -1 -1 0 leq
gpc 2 1 1 -1 0 0 -1 leq
gpc 3 0 1 2 -1 0 -2 leq
gpc 3 0 2 0 1 -2 -1 leq
gpc 3 2 0 1 -2 -1 0 leq
gpc 3 2 0 -1 0 1 -2 leq
gpc 5 1 1 2 0 0 -1 leq
gpc 5 1 2 0 1 0 -1 leq
gpc 5 1 2 1 0 -1 0 leq
gpc 5 2 1 1 -1 0 0 leq
gpc 5 2 1 0 0 1 -1 leq
gpc 5 2 0 1 0 4 3 geq
gpc 5 2 1 0 0 3 4 geq
gpc 6 3 -1 0 1 2 -3 leq
gpc 6 0 1 2 3 -1 -3 leq
gpc 9 1 2 2 3 0 0 leq

setting 6 4 2
provenance builtin N=6 S=1 d=4 (pairwise degeneracy; the two-hole triplet spatial state is a general antisymmetric two-tensor)
gpc 0 1 -1 0 0 eq
gpc 0 0 0 1 -1 eq

setting 6 5 2
provenance builtin N=6 S=1 d=5 (two bounds corrected from 2 to 3; see particle-hole image of N=4 S=1 d=5)
gpc 2 1 0 0 0 0 leq
gpc 3 2 -1 0 1 -2 leq
gpc 3 2 1 -2 -1 0 leq
gpc 3 1 2 -1 -2 0 leq
gpc 3 0 2 1 -2 -1 leq
gpc 3 0 1 2 -1 -2 leq
gpc 3 1 0 1 0 -1 leq
gpc 3 1 1 0 -1 0 leq

setting 6 6 2
provenance builtin N=6 S=1 d=6
gpc 2 1 0 0 0 0 0 leq
gpc 3 1 0 1 0 -1 -1 leq
gpc 3 1 1 0 -1 0 -1 leq
gpc 9 3 0 1 2 -1 -2 leq
gpc 9 3 2 -1 0 1 -2 leq
gpc 9 3 0 2 1 -2 -1 leq
gpc 9 3 1 2 -1 -2 0 leq
gpc 9 3 2 1 -2 -1 0 leq
gpc 9 2 3 0 -1 1 -2 leq
gpc 9 1 2 3 0 -1 -2 leq
gpc 9 1 3 2 -1 0 -2 leq
gpc 9 2 1 3 0 -2 -1 leq
gpc 9 2 3 1 -2 0 -1 leq

setting 7 5 3
provenance builtin N=7 S=3/2 d=5 (pairwise degeneracy plus a pinned unit occupation; three-hole quartet spatial states dualize to two-forms on five orbitals)
gpc 0 1 -1 0 0 0 eq
gpc 0 0 0 1 -1 0 eq
gpc 1 0 0 0 0 1 eq

setting 7 6 3
provenance builtin N=7 S=3/2 d=6 (particle-hole image of N=5 S=3/2 d=6)
gpc 9 3 0 1 2 -1 0 leq
gpc 9 2 3 0 0 -1 1 leq
gpc 9 3 2 0 -1 0 1 leq
gpc 4 1 0 1 0 1 -1 leq
gpc 1 0 0 0 0 1 -1 leq
gpc 3 1 1 0 0 -1 0 leq
gpc 3 1 0 1 0 0 -1 leq
gpc 2 1 1 0 -1 -1 0 leq
gpc 2 1 0 1 -1 0 -1 leq
gpc 2 0 1 1 0 -1 -1 leq
gpc 2 1 0 0 1 -1 -1 leq
gpc 3 2 0 1 -2 -1 0 leq
gpc 3 1 2 -1 0 -2 0 leq
gpc 3 0 1 2 -1 0 -2 leq
gpc 3 2 -1 0 1 0 -2 leq
gpc -1 1 0 0 -2 -1 -1 leq
gpc -1 1 0 -1 0 -2 -1 leq
gpc -1 0 1 0 -1 -2 -1 leq
gpc -1 0 0 1 -1 -1 -2 leq
gpc -1 1 -1 0 0 -1 -2 leq
gpc 15 3 4 0 1 0 2 leq
gpc 15 4 3 0 0 1 2 leq
gpc 2 3 -2 -1 0 1 -3 leq
gpc 2 3 1 -3 -2 -1 0 leq
gpc 7 0 0 3 2 2 1 geq

setting-so 3 6
provenance builtin spin-independent three-electron six-spin-orbital set
gpc 1 1 0 0 0 0 1 eq
gpc 1 0 1 0 0 1 0 eq
gpc 1 0 0 1 1 0 0 eq
gpc 0 0 0 0 -1 1 1 geq
)CATALOG";
}

}  // namespace spingpc::detail
