#include "vklab/galois.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vklab/errors.hpp"

namespace vklab {

void SheetAssignment::validate(const GroupPresentation& p) const {
  if (degree < 2)
    throw std::invalid_argument("sheet assignment: cover degree must be >= 2");
  if (static_cast<int>(images.size()) != p.generators)
    throw std::invalid_argument(
        "sheet assignment: need one transposition per generator (" +
        std::to_string(images.size()) + " given, " +
        std::to_string(p.generators) + " generators)");
  for (size_t j = 0; j < images.size(); ++j) {
    if (images[j].degree() != degree)
      throw std::invalid_argument("sheet assignment: image of " +
                                  p.label(static_cast<int>(j) + 1) +
                                  " has the wrong degree");
    if (!images[j].is_transposition())
      throw std::invalid_argument("sheet assignment: image of " +
                                  p.label(static_cast<int>(j) + 1) +
                                  " is not a transposition");
  }
  HomCheck h = verify_hom(p, images);
  if (!h.ok)
    throw std::invalid_argument(
        "sheet assignment: relator " + std::to_string(h.bad_relator) +
        " does not map to the identity");
  if (!h.transitive)
    throw std::invalid_argument(
        "sheet assignment: image subgroup is not transitive on the sheets");
}

SheetAssignment read_sheets(const std::string& text,
                            const GroupPresentation& p) {
  std::map<std::string, std::string> cycles_of;
  int declared_degree = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "degree") {
      if (!(ls >> declared_degree))
        throw ParseError("sheets line " + std::to_string(lineno) +
                         ": expected a number after 'degree'");
    } else if (key == "sheet") {
      std::string label, rest;
      if (!(ls >> label))
        throw ParseError("sheets line " + std::to_string(lineno) +
                         ": expected a generator label");
      std::getline(ls, rest);
      if (!cycles_of.emplace(label, rest).second)
        throw ParseError("sheets line " + std::to_string(lineno) +
                         ": duplicate assignment for " + label);
    } else {
      throw ParseError("sheets line " + std::to_string(lineno) +
                       ": unknown directive '" + key + "'");
    }
  }

  int degree = declared_degree;
  if (degree == 0) {
    for (const auto& [label, cyc] : cycles_of) {
      std::string digits;
      for (char c : cyc) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          digits += c;
        } else if (!digits.empty()) {
          degree = std::max(degree, std::stoi(digits));
          digits.clear();
        }
      }
      if (!digits.empty()) degree = std::max(degree, std::stoi(digits));
    }
  }
  if (degree < 2) throw ParseError("sheets file: cover degree undetermined");

  SheetAssignment a;
  a.degree = degree;
  for (int j = 1; j <= p.generators; ++j) {
    auto it = cycles_of.find(p.label(j));
    if (it == cycles_of.end())
      throw ParseError("sheets file: no assignment for generator " +
                       p.label(j));
    a.images.push_back(Permutation::parse_cycles(it->second, degree));
  }
  if (cycles_of.size() != static_cast<size_t>(p.generators))
    throw ParseError("sheets file: assignment for a label not among the "
                     "presentation generators");
  return a;
}

SheetAssignment read_sheets_file(const std::string& path,
                                 const GroupPresentation& p) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_sheets(buf.str(), p);
}

std::string GaloisResult::str() const {
  std::ostringstream os;
  if (!complete) {
    os << "galois: indeterminate (enumeration exceeded " << max_cosets
       << " cosets)\n";
    return os.str();
  }
  os << "quotient order: " << quotient_order << "\n";
  os << "image order: " << image_order << "\n";
  os << "kernel index: " << image_order << "\n";
  os << "kernel order: " << kernel_order << "\n";
  if (kernel_order == 1)
    os << "pi1 cover: trivial\n";
  else
    os << "pi1 cover: " << kernel.generators << " generators, "
       << kernel.relators.size() << " relators\n";
  os << "pi1 cover abelianization: " << kernel_abelian.str() << "\n";
  return os.str();
}

GaloisResult galois_group(const GroupPresentation& p, const SheetAssignment& a,
                          int max_cosets) {
  a.validate(p);

  GroupPresentation psq = p;
  for (int j = 1; j <= p.generators; ++j)
    psq.add_relator(FreeWord::generator(p.generators, j).power(2));

  GaloisResult out;
  out.max_cosets = max_cosets;
  CosetTable full = todd_coxeter(psq, {}, max_cosets);
  if (!full.complete) return out;
  out.complete = true;
  out.quotient_order = full.cosets();

  // Enumerate the image subgroup breadth-first from the identity, taking
  // generator images and their inverses in column order; the listing order
  // doubles as a standardized coset numbering for the kernel.
  const int g = p.generators;
  std::vector<Permutation> cols;
  for (int j = 0; j < g; ++j) {
    cols.push_back(a.images[j]);
    cols.push_back(a.images[j].inverse());
  }
  auto key_of = [&](const Permutation& q) {
    std::string k;
    for (int i = 1; i <= a.degree; ++i)
      k += std::to_string(q.apply(i)) + ",";
    return k;
  };
  std::vector<Permutation> elems{Permutation::identity(a.degree)};
  std::map<std::string, int> index{{key_of(elems[0]), 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const Permutation& c : cols) {
      Permutation q = elems[head].then(c);
      if (index.emplace(key_of(q), static_cast<int>(elems.size())).second)
        elems.push_back(q);
    }
  out.image_order = static_cast<long long>(elems.size());
  if (out.quotient_order % out.image_order != 0)
    throw Error("galois_group: image order does not divide quotient order");
  out.kernel_order = out.quotient_order / out.image_order;

  // Coset table of the kernel: cosets are the image elements themselves,
  // acted on by right multiplication.
  CosetTable kt;
  kt.presentation = psq;
  kt.complete = true;
  kt.max_cosets = static_cast<int>(elems.size());
  kt.rows.assign(elems.size(), std::vector<int>(2 * g, -1));
  for (size_t r = 0; r < elems.size(); ++r)
    for (int c = 0; c < 2 * g; ++c)
      kt.rows[r][c] = index.at(key_of(elems[r].then(cols[c])));

  GroupPresentation kernel_raw = reidemeister_schreier(kt);
  out.kernel = tietze_simplify(kernel_raw, TietzeLimits{});
  out.kernel_abelian = abelianization(out.kernel);
  return out;
}

}  // namespace vklab
