#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vklab/braid.hpp"

namespace vklab {

/* Local singularity type; eps is the exponent of the half-twist in the
 * monodromy factor: branch point 1, node 2, cusp 3.  local_model covers
 * y^2 = x^m for arbitrary m >= 1. */
enum class SingKind { branch, node, cusp, local_model };

std::string kind_name(SingKind k);

/* One factor Q^eps of a braid monodromy factorization.  Q is a half-twist,
 * stored either as a combinatorial path or, when the path is unknown (after
 * Hurwitz moves or numeric tracking), as an explicit braid word claimed to
 * be a conjugated half-twist.  The claim is checked by validate(): the word
 * must have exponent sum 1 and transposition permutation image. */
class SingularFactor {
 public:
  SingularFactor(SingKind kind, int eps, HalfTwistPath path);
  SingularFactor(SingKind kind, int eps, BraidWord conjugated_halftwist);

  SingKind kind() const { return kind_; }
  int eps() const { return eps_; }
  bool has_path() const { return path_.has_value(); }
  const HalfTwistPath& path() const { return *path_; }

  /* The half-twist Q itself. */
  BraidWord base_word() const;
  /* The whole factor Q^eps. */
  BraidWord word() const;

  int strands() const;

  friend bool operator==(const SingularFactor&, const SingularFactor&);

 private:
  SingKind kind_;
  int eps_;
  std::optional<HalfTwistPath> path_;
  std::optional<BraidWord> word_;
};

struct Factorization {
  int strands = 2;
  std::string label;
  std::vector<SingularFactor> factors;

  /* Product of all factors in list order. */
  BraidWord product() const;
};

/* Braid monodromy of y^2 = x^m around x = 0: one factor H(1,2)^m in B_2. */
Factorization local_model(int m);

struct ValidationReport {
  bool product_is_full_twist = false;
  long long exponent_sum_expected = 0;
  long long exponent_sum_actual = 0;
  bool transitive = false;
  int count_branch = 0, count_node = 0, count_cusp = 0, count_local = 0;
  bool factors_are_halftwists = true;
  std::vector<int> bad_factors;  // 1-based indices failing the word check

  bool all_ok() const;
  std::string str() const;
};

ValidationReport validate(const Factorization& f);

/* Hurwitz move at position i (1-based): (F_i, F_{i+1}) becomes
 * (F_{i+1}, F_{i+1}^-1 F_i F_{i+1}); the product and the multiset of
 * (kind, eps) are unchanged.  The conjugated factor is stored in word form. */
Factorization hurwitz_move(const Factorization& f, int i);
Factorization hurwitz_move_inverse(const Factorization& f, int i);

/* .bmf file format:
 *   # comment
 *   strands 6
 *   label some-name            (optional)
 *   factor cusp 3 path: H(1,2)
 *   factor branch 1 word: s2 s1 s2^-1
 */
Factorization read_bmf(std::istream& in);
Factorization read_bmf_file(const std::string& path);
void write_bmf(std::ostream& out, const Factorization& f);

}  // namespace vklab
