// Permutation representations of braid-group commutator subgroups.

#ifndef BRAIDREP_BRAIDREP_HPP_
#define BRAIDREP_BRAIDREP_HPP_

#include "cache.hpp"        // IWYU pragma: export
#include "census.hpp"       // IWYU pragma: export
#include "paper_table.hpp"  // IWYU pragma: export
#include "perm.hpp"         // IWYU pragma: export
#include "serialize.hpp"    // IWYU pragma: export
#include "shift_graph.hpp"  // IWYU pragma: export
#include "tower.hpp"        // IWYU pragma: export

#endif  // BRAIDREP_BRAIDREP_HPP_
