#ifndef TPZ_CAYLEY_HPP
#define TPZ_CAYLEY_HPP

#include "tpz/graph.hpp"

namespace tpz {

// Element of the dihedral group of order 2n: a rotation exponent in 0..n-1
// and a reflection flag. Products come from the presentation
// a^n = b^2 = 1, b a b = a^-1; nothing is table-driven.
struct DihedralElement {
  int rot = 0;
  bool flip = false;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement dihedral_mul(int n, DihedralElement g, DihedralElement h);
DihedralElement dihedral_inv(int n, DihedralElement g);

// Vertex index of an element: rotations first, then reflections.
int dihedral_index(int n, DihedralElement g);
DihedralElement dihedral_element(int n, int index);

// Cayley graph of the dihedral group of order 2n over the connection set
// of all n reflections plus the half-turn rotation. The set is checked to
// be identity-free and inverse-closed before any edge is added.
// Requires n even, n >= 4.
Graph dihedral_cayley(int n);

}  // namespace tpz

#endif
