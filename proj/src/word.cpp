#include "vklab/word.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace vklab {

namespace {

void reduce_into(std::vector<Letter>& stack, const Letter& l) {
  if (!stack.empty() && stack.back().gen == l.gen &&
      stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

std::vector<Letter> reduce(std::vector<Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) reduce_into(stack, l);
  return stack;
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("FreeWord: negative rank");
  for (const Letter& l : letters) {
    if (l.gen < 1 || l.gen > rank)
      throw std::invalid_argument("FreeWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("FreeWord: sign must be +1 or -1");
  }
  letters_ = reduce(std::move(letters));
}

FreeWord FreeWord::generator(int rank, int gen, int sign) {
  return FreeWord(rank, {Letter{gen, sign}});
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  if (rank_ != rhs.rank_)
    throw std::invalid_argument("FreeWord: rank mismatch in product");
  FreeWord out;
  out.rank_ = rank_;
  out.letters_ = letters_;
  out.letters_.reserve(letters_.size() + rhs.letters_.size());
  for (const Letter& l : rhs.letters_) reduce_into(out.letters_, l);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.rank_ = rank_;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, -it->sign});
  return out;
}

FreeWord FreeWord::conjugate(const FreeWord& by) const {
  return by.inverse() * (*this) * by;
}

FreeWord FreeWord::power(int e) const {
  FreeWord out = identity(rank_);
  FreeWord base = e >= 0 ? *this : inverse();
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) out = out * base;
  return out;
}

FreeWord FreeWord::cyclically_reduced() const {
  FreeWord out = *this;
  while (out.letters_.size() >= 2) {
    const Letter& a = out.letters_.front();
    const Letter& b = out.letters_.back();
    if (a.gen == b.gen && a.sign == -b.sign) {
      out.letters_.erase(out.letters_.begin());
      out.letters_.pop_back();
    } else {
      break;
    }
  }
  return out;
}

long long FreeWord::exponent_sum(int gen) const {
  long long s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.sign;
  return s;
}

std::string FreeWord::str() const {
  return detail::print_letters(letters_, 'x');
}

FreeWord FreeWord::parse(const std::string& text, int rank) {
  return FreeWord(rank, detail::parse_letters(text, 'x', rank, "word"));
}

FreeEndomorphism::FreeEndomorphism(std::vector<FreeWord> images)
    : images_(std::move(images)) {
  const int r = static_cast<int>(images_.size());
  for (const FreeWord& w : images_)
    if (w.rank() != r)
      throw std::invalid_argument("FreeEndomorphism: image rank mismatch");
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  std::vector<FreeWord> im;
  im.reserve(rank);
  for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(rank, i));
  return FreeEndomorphism(std::move(im));
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank())
    throw std::invalid_argument("FreeEndomorphism: word rank mismatch");
  FreeWord out = FreeWord::identity(rank());
  for (const Letter& l : w.letters()) {
    const FreeWord& im = images_[l.gen - 1];
    out = out * (l.sign > 0 ? im : im.inverse());
  }
  return out;
}

FreeEndomorphism FreeEndomorphism::then(const FreeEndomorphism& next) const {
  if (rank() != next.rank())
    throw std::invalid_argument("FreeEndomorphism: rank mismatch in then");
  std::vector<FreeWord> im;
  im.reserve(images_.size());
  for (const FreeWord& w : images_) im.push_back(next.apply(w));
  return FreeEndomorphism(std::move(im));
}

}  // namespace vklab
