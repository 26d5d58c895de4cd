#pragma once

#include <string>
#include <vector>

#include "vklab/braid.hpp"
#include "vklab/presentation.hpp"
#include "vklab/vankampen.hpp"

namespace vklab {

/* Degree-n cover data: one sheet transposition per presentation generator.
 * Valid when every image is a transposition, the source relators map to
 * the identity, and the image subgroup is transitive. */
struct SheetAssignment {
  int degree = 0;
  std::vector<Permutation> images;

  /* Throws std::invalid_argument describing the first violated invariant. */
  void validate(const GroupPresentation& p) const;
};

/* Assignment file: one line `sheet <label> <cycles>` per generator of p,
 * optional `degree <n>` header (inferred from the cycles otherwise);
 * `#` starts a comment. */
SheetAssignment read_sheets(const std::string& text,
                            const GroupPresentation& p);
SheetAssignment read_sheets_file(const std::string& path,
                                 const GroupPresentation& p);

/* Fundamental group of the Galois cover: the kernel of
 * (presented group)/<generators squared> -> S_degree. */
struct GaloisResult {
  bool complete = false;  // false: coset enumeration exceeded its bound
  int max_cosets = 0;
  long long quotient_order = 0;  // order of p modulo the squares
  long long image_order = 0;     // order of the sheet-permutation group
  long long kernel_order = 0;    // quotient_order / image_order
  GroupPresentation kernel;      // simplified kernel presentation
  AbelianInvariants kernel_abelian;
  std::string str() const;
};

/* Deterministic pipeline: adjoin squares, enumerate the quotient by
 * Todd-Coxeter over the trivial subgroup, identify cosets of the kernel
 * with image permutations, present the kernel by Reidemeister-Schreier,
 * then simplify and abelianize.  Indeterminate (complete = false) when
 * the enumeration exceeds max_cosets. */
GaloisResult galois_group(const GroupPresentation& p, const SheetAssignment& a,
                          int max_cosets);

}  // namespace vklab
