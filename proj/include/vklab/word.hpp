#pragma once

#include <string>
#include <vector>

namespace vklab {

/* One letter of a word in a free or braid group: generator index (1-based)
 * and sign +1/-1.  Powers are always expanded; reduced words never hold a
 * letter next to its inverse. */
struct Letter {
  int gen;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/* Freely reduced word in the free group F_rank on x1..x_rank.
 * Reduction happens on construction and after every product, so equality
 * of words is equality in the group. */
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(int rank, std::vector<Letter> letters);

  static FreeWord identity(int rank) { return FreeWord(rank, {}); }
  static FreeWord generator(int rank, int gen, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  FreeWord conjugate(const FreeWord& by) const;  // by^-1 * w * by
  FreeWord power(int e) const;

  /* Strips matching first/last letters; the result generates the same
   * normal closure. */
  FreeWord cyclically_reduced() const;

  /* Net exponent of generator g. */
  long long exponent_sum(int gen) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /* Text form "x1 x2^-1 x1"; the empty word prints as "1".
   * parse accepts exponents (x1^3, x2^-2) and expands them. */
  std::string str() const;
  static FreeWord parse(const std::string& text, int rank);

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

/* Endomorphism of F_rank given by generator images; composition and
 * application are enough for the Artin action and for Van Kampen relators. */
class FreeEndomorphism {
 public:
  explicit FreeEndomorphism(std::vector<FreeWord> images);
  static FreeEndomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int gen) const { return images_[gen - 1]; }
  const std::vector<FreeWord>& images() const { return images_; }

  FreeWord apply(const FreeWord& w) const;

  /* this followed by next (left-to-right order of application). */
  FreeEndomorphism then(const FreeEndomorphism& next) const;

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) =
      default;

 private:
  std::vector<FreeWord> images_;
};

}  // namespace vklab
