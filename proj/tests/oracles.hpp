#pragma once

// Reference computations used to cross-check the library. They share only the
// PD data format with the code under test.

#include <cstdint>
#include <string>
#include <vector>

#include "orbiknot/integer_matrix.hpp"
#include "orbiknot/montesinos_link.hpp"
#include "orbiknot/pd_code.hpp"
#include "orbiknot/presentation.hpp"

namespace oracle {

using orbiknot::BigInt;
using orbiknot::PDCode;

std::string fixture_path(std::string const &name);
PDCode load_fixture(std::string const &name);
std::vector<std::string> fixture_names();
std::vector<std::string> knot_fixture_names();

// Over-strand arcs: labels at positions 1 and 3 of a crossing are glued.
std::vector<int> arc_of_label(PDCode const &code, int *arc_count);

// Fox coloring matrix: one row per crossing, 2*over - in - out.
std::vector<std::vector<std::int64_t>> coloring_matrix(PDCode const &code);

// |first minor| of the coloring matrix, by exact rational elimination. For a
// crossingless diagram with c circles: 1 for c = 1, else 0.
BigInt fox_minor_det(PDCode const &code);

// Number of Fox colorings mod a prime p, as p^nullity over F_p.
std::uint64_t colorings_mod_prime(PDCode const &code, int p);

// Exhaustive enumeration of colorings over Z/n; `surjective_only` keeps the
// ones whose colour differences generate Z/n.
std::uint64_t brute_colorings(PDCode const &code, int n, bool surjective_only);

using Perm = std::vector<int>;
Perm compose(Perm const &a, Perm const &b);  // a first, then b
Perm inverse(Perm const &a);
int order(Perm const &a);
std::vector<Perm> closure(std::vector<Perm> const &gens);
std::vector<Perm> all_perms(int k);

// Counts assignments of generators to `elements` satisfying every relator;
// with `epi` only those whose images generate all of `elements`.
std::uint64_t brute_hom_count(orbiknot::GroupPresentation const &pres, std::vector<Perm> const &elements,
                              bool epi);

// Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3), or
// the Klein four-group on 4 points for n = 2.
std::vector<Perm> dihedral_perms(int n);

// True when b is a rotation or reflection of the sequence a.
bool dihedral_related(std::vector<orbiknot::Rational> const &a, std::vector<orbiknot::Rational> const &b);

}  // namespace oracle
