#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "vklab/braid.hpp"
#include "vklab/vankampen.hpp"

namespace vklab {

using BigInt = boost::multiprecision::cpp_int;

/* Abelianization invariants: Z^free_rank + sum of Z/d with the d forming a
 * divisibility chain, each d >= 2. */
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) =
      default;
};

/* Smith normal form diagonal of an integer matrix (rows x cols), exact. */
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m);

/* Abelian invariants from the relator exponent matrix. */
AbelianInvariants abelianization(const GroupPresentation& p);

struct TietzeLimits {
  int max_passes = 40;
  int max_image_length = 400;      // longest substitution image allowed
  long long max_total_length = 4000000;  // abort growth beyond this
};

/* Deterministic simplification: free/cyclic reduction, duplicate removal
 * (up to rotation and inversion), generator elimination via relators that
 * use some generator exactly once (shortest relator first, lexicographic
 * ties), and overlap rewriting when strictly length-decreasing.  Sets
 * not_minimal when a limit stopped further work. */
GroupPresentation tietze_simplify(const GroupPresentation& p,
                                  const TietzeLimits& limits = {});

/* Coset table of a subgroup in a finitely presented group.  Rows are cosets
 * (0 = the subgroup), columns alternate generator / inverse.  Either every
 * entry is filled (complete) or enumeration hit max_cosets (indeterminate:
 * a value, not an error). */
struct CosetTable {
  GroupPresentation presentation;
  std::vector<FreeWord> subgroup;
  bool complete = false;
  int max_cosets = 0;
  std::vector<std::vector<int>> rows;  // rows[c][2g-2]=c*xg, [2g-1]=c*xg^-1

  int cosets() const { return static_cast<int>(rows.size()); }
  int index() const;        // throws if not complete
  std::string tsv() const;  // deterministic export
};

/* Felsch-style enumeration: definition-driven with an immediate deduction
 * stack, deterministic scanning order (relator list order, then generator
 * index).  Complete tables are standardized by breadth-first renumbering. */
CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<FreeWord>& subgroup_gens,
                        int max_cosets);

/* Subgroup presentation on Schreier generators, from a complete table. */
GroupPresentation reidemeister_schreier(const CosetTable& t);

struct HomCheck {
  bool ok = false;          // all relators map to the identity
  bool transitive = false;  // image acts transitively
  int bad_relator = 0;      // 1-based index of the first broken relator
};

/* Does Gj -> images[j-1] define a homomorphism to S_degree? */
HomCheck verify_hom(const GroupPresentation& p,
                    const std::vector<Permutation>& images);

}  // namespace vklab
