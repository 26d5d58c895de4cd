#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vklab/monodromy.hpp"
#include "vklab/word.hpp"

namespace vklab {

/* Finite presentation <G1..Gg | relators>.  Relators are kept cyclically
 * reduced and nontrivial.  not_minimal is set by simplification passes that
 * hit a resource limit before reaching a fixpoint. */
struct GroupPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  std::vector<std::string> labels;  // size == generators
  bool not_minimal = false;

  static GroupPresentation free_group(int generators);
  void add_relator(FreeWord r);  // cyclically reduces; drops trivial
  std::string label(int gen) const;
  void default_labels();
  long long total_relator_length() const;
  std::string str() const;
};

/* .gp file format:
 *   generators 6
 *   rel x1 x2^-1
 * '#' comment lines allowed. */
GroupPresentation read_gp(std::istream& in);
GroupPresentation read_gp_file(const std::string& path);
void write_gp(std::ostream& out, const GroupPresentation& p);

enum class VkMode { full, shortcut };

/* Presentation of the complement of the curve from its braid monodromy
 * factorization.  Full mode: one relator (Gj)phi = Gj per factor word phi
 * and generator j.  Shortcut mode: for path-encoded factors the single
 * relator per factor in the conjugated generator pair A, B:
 *   eps 1: A = B;  eps 2: [A,B] = 1;  eps 3: ABA = BAB.
 * Factors without a path (word form) fall back to the full relators; each
 * fallback appends a note line to *warnings if given. */
GroupPresentation affine_presentation(const Factorization& f, VkMode mode,
                                      std::vector<std::string>* warnings =
                                          nullptr);

/* The conjugated generator pair (A, B) of a path-encoded factor: images of
 * x_a and x_{a+1} under the inverse of the path's conjugator prefix V.
 * Satisfies (A)H = B and (B)H = B A B^-1 for the half-twist H. */
std::pair<FreeWord, FreeWord> conjugated_pair(const HalfTwistPath& p);

/* Adds the projective relator G_m ... G_1 (descending).  Refuses unless
 * validate(f).product_is_full_twist. */
GroupPresentation projective_presentation(const GroupPresentation& p,
                                          const Factorization& f);

}  // namespace vklab
