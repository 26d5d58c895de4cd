#include "vklab/vankampen.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vklab/errors.hpp"

namespace vklab {

GroupPresentation GroupPresentation::free_group(int generators) {
  if (generators < 0)
    throw std::invalid_argument("GroupPresentation: negative generator count");
  GroupPresentation p;
  p.generators = generators;
  p.default_labels();
  return p;
}

void GroupPresentation::add_relator(FreeWord r) {
  if (r.rank() != generators)
    throw std::invalid_argument("add_relator: rank mismatch");
  r = r.cyclically_reduced();
  if (!r.empty()) relators.push_back(std::move(r));
}

std::string GroupPresentation::label(int gen) const {
  if (gen >= 1 && gen <= static_cast<int>(labels.size()))
    return labels[gen - 1];
  return "G" + std::to_string(gen);
}

void GroupPresentation::default_labels() {
  labels.clear();
  labels.reserve(generators);
  for (int i = 1; i <= generators; ++i) labels.push_back("G" + std::to_string(i));
}

long long GroupPresentation::total_relator_length() const {
  long long n = 0;
  for (const FreeWord& r : relators) n += r.length();
  return n;
}

std::string GroupPresentation::str() const {
  std::ostringstream os;
  os << "< ";
  for (int i = 1; i <= generators; ++i) {
    if (i > 1) os << ", ";
    os << label(i);
  }
  os << " |";
  for (size_t i = 0; i < relators.size(); ++i) {
    os << (i ? ", " : " ");
    const FreeWord& r = relators[i];
    std::string s;
    for (size_t k = 0; k < r.letters().size(); ++k) {
      if (k) s += ' ';
      s += label(r.letters()[k].gen);
      if (r.letters()[k].sign < 0) s += "^-1";
    }
    os << s;
  }
  os << " >";
  return os.str();
}

GroupPresentation read_gp(std::istream& in) {
  GroupPresentation p;
  bool have_gens = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    auto fail = [&](const std::string& why) {
      throw ParseError("gp line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "generators") {
      if (!(ls >> p.generators) || p.generators < 0)
        fail("bad generator count");
      have_gens = true;
      p.default_labels();
    } else if (key == "rel") {
      if (!have_gens) fail("rel before generators");
      std::string rest;
      std::getline(ls, rest);
      size_t s = rest.find_first_not_of(" \t");
      rest = s == std::string::npos ? "" : rest.substr(s);
      p.add_relator(FreeWord::parse(rest, p.generators));
    } else {
      fail("unknown key " + key);
    }
  }
  if (!have_gens) throw ParseError("gp: missing generators line");
  return p;
}

GroupPresentation read_gp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_gp(in);
}

void write_gp(std::ostream& out, const GroupPresentation& p) {
  out << "generators " << p.generators << "\n";
  for (const FreeWord& r : p.relators) out << "rel " << r.str() << "\n";
}

std::pair<FreeWord, FreeWord> conjugated_pair(const HalfTwistPath& p) {
  const int n = p.strands();
  // Conjugator prefix of halftwist_to_word: the word is V s_a V^-1.
  std::vector<Letter> v;
  for (int k = p.b() - 1; k >= p.a() + 1; --k) {
    int sign = p.side_at(k) == HalfTwistPath::Side::below ? 1 : -1;
    v.push_back({k, sign});
  }
  FreeEndomorphism e = artin_action(BraidWord(n, v).inverse());
  return {e.apply(FreeWord::generator(n, p.a())),
          e.apply(FreeWord::generator(n, p.a() + 1))};
}

GroupPresentation affine_presentation(const Factorization& f, VkMode mode,
                                      std::vector<std::string>* warnings) {
  const int m = f.strands;
  GroupPresentation p = GroupPresentation::free_group(m);
  auto add_full_relators = [&](const SingularFactor& fac) {
    FreeEndomorphism e = artin_action(fac.word());
    for (int j = 1; j <= m; ++j) {
      FreeWord g = FreeWord::generator(m, j);
      p.add_relator(e.apply(g) * g.inverse());
    }
  };
  for (size_t idx = 0; idx < f.factors.size(); ++idx) {
    const SingularFactor& fac = f.factors[idx];
    if (fac.strands() != m)
      throw std::invalid_argument(
          "affine_presentation: factor strand count mismatch");
    if (mode == VkMode::shortcut && fac.has_path() && fac.eps() <= 3) {
      auto [A, B] = conjugated_pair(fac.path());
      switch (fac.eps()) {
        case 1:
          p.add_relator(A * B.inverse());
          break;
        case 2:
          p.add_relator(A * B * A.inverse() * B.inverse());
          break;
        default:
          p.add_relator(A * B * A * B.inverse() * A.inverse() * B.inverse());
      }
      continue;
    }
    if (mode == VkMode::shortcut && warnings)
      warnings->push_back("factor " + std::to_string(idx + 1) + ": " +
                          (fac.has_path() ? "eps > 3" : "no path encoding") +
                          ", using full relators");
    add_full_relators(fac);
  }
  return p;
}

GroupPresentation projective_presentation(const GroupPresentation& p,
                                          const Factorization& f) {
  ValidationReport r = validate(f);
  if (!r.product_is_full_twist)
    throw Refusal(
        "projective_presentation: factorization product is not the full "
        "twist");
  if (p.generators != f.strands)
    throw std::invalid_argument(
        "projective_presentation: presentation does not match factorization");
  GroupPresentation out = p;
  FreeWord w = FreeWord::identity(p.generators);
  for (int j = p.generators; j >= 1; --j)
    w = w * FreeWord::generator(p.generators, j);
  out.add_relator(w);
  return out;
}

}  // namespace vklab
