#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vklab/braid.hpp"

namespace vklab {

using BigInt = boost::multiprecision::cpp_int;

/* Normal-form element u1^a1 ... u_{n-1}^a_{n-1} tau^t of the class-2
 * nilpotent group G_0(n): tau is central with tau^2 = 1 and
 * [u_i, u_j] = tau exactly when |i - j| = 1, trivial otherwise. */
struct G0Element {
  int n = 0;
  std::vector<BigInt> exponents;  // size n-1, entry i-1 is the power of u_i
  int tau = 0;                    // 0 or 1

  static G0Element identity(int n);
  static G0Element u(int n, int i);    // generator u_i, 1 <= i <= n-1
  static G0Element tau_elt(int n);

  bool is_identity() const;
  bool operator==(const G0Element& o) const = default;
  std::string str() const;
};

G0Element g0_parse(int n, const std::string& text);

G0Element g0_multiply(const G0Element& a, const G0Element& b);
G0Element g0_invert(const G0Element& a);
G0Element g0_power(const G0Element& a, long long m);
inline G0Element operator*(const G0Element& a, const G0Element& b) {
  return g0_multiply(a, b);
}

/* tau exponent of the commutator [a, b]; 0 means the elements commute. */
int g0_commutator_bit(const G0Element& a, const G0Element& b);

/* Does g commute with every generator (hence with everything)? */
bool g0_is_central(const G0Element& g);

/* Right action of a braid word in frame letters on G_0(n); each letter
 * acts as an automorphism, inverse letters by the inverse automorphism.
 * Generator images of x_k:  u_k -> u_k tau,  u_{k-1} -> u_k u_{k-1},
 * u_{k+1} -> u_k^-1 u_{k+1},  u_i -> u_i for |i-k| >= 2.
 *
 * The sign split between the two |i-k| = 1 cases is forced: it is the only
 * completion of the other cases for which the frame letters satisfy the
 * braid relations on integer exponent vectors.  With it, the exponent part
 * of x_k is the transvection a -> a + (a_{k-1} - a_{k+1}) e_k, so commutators
 * of transversal half-twists act nontrivially on exponents — but always by
 * CENTRAL twists g -> g z(g) (the defect has even exponents, which commute
 * with everything).  Triviality claims for the quotient by transversal
 * commutators are therefore checked modulo the center; see
 * verify_action_well_defined and quadrangle_check. */
G0Element frame_action(const BraidWord& w, const G0Element& g);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;  // shown on failure
  std::string str() const;
};

struct ActionReport {
  std::vector<CheckLine> checks;
  bool all_pass() const;
  std::string str() const;
};

/* The computable content of the claim that the quotient braid group (not
 * merely the free group on the frame letters) acts on G_0(n): braid
 * relations and far commutation hold as exact automorphism equalities, and
 * the commutators of the supplied transversal half-twist pairs act
 * trivially modulo the center (every image (u_i)_[X,Y] differs from u_i by
 * a central element — exact triviality is impossible on integer exponents;
 * see frame_action). */
ActionReport verify_action_well_defined(
    int n, const std::vector<std::pair<HalfTwistPath, HalfTwistPath>>&
               transversal_pairs);

struct QuadrangleReport {
  BraidWord word;  // (x1^2 x3^2)(x2^2 x4^2)^-1
  bool permutation_trivial = false;
  bool exponent_sum_zero = false;
  bool g0_action_central = false;  // w acts on G_0 by a central twist
  bool all_pass() const {
    return permutation_trivial && exponent_sum_zero && g0_action_central;
  }
  std::string str() const;
};

/* Necessary conditions for the quadrangle identity x1^2 x3^2 = x2^2 x4^2:
 * the four paths must form a quadrangle (consecutive sides adjacent,
 * opposite sides disjoint).  The action condition is centrality of the
 * defect, the exact shadow of the identity in the transversal quotient
 * (squares of the exponent transvections are the identity mod 2). */
QuadrangleReport quadrangle_check(const HalfTwistPath& x1,
                                  const HalfTwistPath& x2,
                                  const HalfTwistPath& x3,
                                  const HalfTwistPath& x4);

struct PrimeCheckReport {
  bool cond_inverse = false;      // (g)_{X^-1} = g^-1 tau
  bool cond_consecutive = false;  // (g)_{XYX^-1} = ((g)_X)^-1 (g)_{XY^-1}
  bool cond_disjoint = false;     // (g)_Z = g for disjoint Z
  std::vector<std::string> failures;
  bool all_pass() const {
    return cond_inverse && cond_consecutive && cond_disjoint;
  }
  std::string str() const;
};

/* Evaluates the three defining identities of a prime element with
 * supporting half-twist X (a frame index).  Samples: paths adjacent to
 * the frame path (k,k+1) for the middle condition, disjoint paths for the
 * last.  Reports verdicts; nothing is presumed about which elements pass. */
PrimeCheckReport prime_check(const G0Element& g, int frame_index,
                             const G0Element& tau_candidate,
                             const std::vector<HalfTwistPath>& consecutive,
                             const std::vector<HalfTwistPath>& disjoint);

struct TransversalRelationSet {
  int strands = 0;
  std::vector<std::pair<HalfTwistPath, HalfTwistPath>> pairs;
  std::vector<BraidWord> relators;  // commutator [X, Y] per pair
  std::string str() const;
};

/* Filters the supplied paths pairwise through classify_pair and emits one
 * commutator relator X Y X^-1 Y^-1 per transversal pair. */
TransversalRelationSet transversal_relations(
    int strands, const std::vector<HalfTwistPath>& paths);

struct SolvableSeriesLayer {
  std::string quotient;  // e.g. "G/H = S9"
  bool verified = false;
  std::string note;
};

struct SolvableSeriesReport {
  std::vector<SolvableSeriesLayer> layers;
  std::string str() const;
};

/* The recorded normal series of the degree-n quotient together with the
 * layers this artifact actually verifies: surjectivity onto S_n and the
 * centrality and order of the distinguished involution. */
SolvableSeriesReport solvable_series_report(int n);

}  // namespace vklab
