#include "vklab/presentation.hpp"

#include "vklab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vklab {

std::string AbelianInvariants::str() const {
  if (is_trivial()) return "trivial";
  std::string out;
  if (free_rank == 1)
    out = "Z";
  else if (free_rank > 1)
    out = "Z^" + std::to_string(free_rank);
  for (const BigInt& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out;
}

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<BigInt> diag;
  int t = 0;
  auto abs_of = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
  while (t < rows && t < cols) {
    // Locate the submatrix entry of least nonzero magnitude.
    int pr = -1, pc = -1;
    BigInt best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          BigInt a = abs_of(m[i][j]);
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the submatrix.
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
          }
    }
    diag.push_back(abs_of(m[t][t]));
    ++t;
  }
  return diag;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(p.relators.size());
  for (const FreeWord& r : p.relators) {
    std::vector<BigInt> row(p.generators, 0);
    for (const Letter& l : r.letters()) row[l.gen - 1] += l.sign;
    m.push_back(std::move(row));
  }
  std::vector<BigInt> diag = smith_normal_form(std::move(m));
  AbelianInvariants out;
  long long nonzero = 0;
  for (const BigInt& d : diag)
    if (d != 0) {
      ++nonzero;
      if (d != 1) out.torsion.push_back(d);
    }
  out.free_rank = p.generators - nonzero;
  return out;
}

/* ---------------------------------------------------------------- Tietze */

namespace {

using IWord = std::vector<int>;  // signed generator indices, 1-based

IWord iword_of(const FreeWord& w) {
  IWord out;
  out.reserve(w.letters().size());
  for (const Letter& l : w.letters()) out.push_back(l.sign * l.gen);
  return out;
}

FreeWord word_of(const IWord& w, int rank) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (int v : w) letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
  return FreeWord(rank, std::move(letters));
}

void ireduce(IWord& w) {
  IWord out;
  out.reserve(w.size());
  for (int v : w) {
    if (!out.empty() && out.back() == -v)
      out.pop_back();
    else
      out.push_back(v);
  }
  w = std::move(out);
}

void icyc_reduce(IWord& w) {
  ireduce(w);
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  w = IWord(w.begin() + i, w.begin() + j);
}

IWord iinverse(const IWord& w) {
  IWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

int letter_code(int v) { return v > 0 ? 2 * v : -2 * v + 1; }

bool iword_less(const IWord& a, const IWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_code(a[i]) < letter_code(b[i]);
  return false;
}

/* Least rotation of w or of w^-1, in the (length, letter-code) order. */
IWord cyclic_canonical(const IWord& w) {
  if (w.empty()) return w;
  IWord best;
  for (const IWord* base : {&w, (const IWord*)nullptr}) {
    IWord inv;
    const IWord& u = base ? *base : (inv = iinverse(w));
    for (size_t r = 0; r < u.size(); ++r) {
      IWord rot(u.begin() + r, u.end());
      rot.insert(rot.end(), u.begin(), u.begin() + r);
      if (best.empty() || iword_less(rot, best)) best = rot;
    }
  }
  return best;
}

struct TietzeState {
  std::vector<IWord> relators;
  std::vector<std::string> labels;
  bool not_minimal = false;

  int gens() const { return static_cast<int>(labels.size()); }

  long long total_length() const {
    long long n = 0;
    for (const IWord& r : relators) n += static_cast<long long>(r.size());
    return n;
  }

  void tidy() {
    for (IWord& r : relators) icyc_reduce(r);
    std::erase_if(relators, [](const IWord& r) { return r.empty(); });
    for (IWord& r : relators) r = cyclic_canonical(r);
    std::sort(relators.begin(), relators.end(), iword_less);
    relators.erase(std::unique(relators.begin(), relators.end()),
                   relators.end());
  }

  /* Replace every occurrence of generator g by image (a word not using g),
   * then delete g, shifting higher indices down. */
  void eliminate(int g, const IWord& image) {
    IWord inv = iinverse(image);
    for (IWord& r : relators) {
      IWord out;
      for (int v : r) {
        const IWord* rep = v == g ? &image : v == -g ? &inv : nullptr;
        if (rep)
          out.insert(out.end(), rep->begin(), rep->end());
        else
          out.push_back(v);
      }
      ireduce(out);
      r = std::move(out);
    }
    for (IWord& r : relators)
      for (int& v : r) {
        if (v > g) --v;
        if (v < -g) ++v;
      }
    labels.erase(labels.begin() + (g - 1));
  }

  /* A relator in which some generator appears exactly once lets us solve
   * for it.  Returns (relator index, generator) or (-1, 0). */
  std::pair<int, int> find_eliminable(int max_image_length) const {
    for (size_t ri = 0; ri < relators.size(); ++ri) {
      const IWord& r = relators[ri];
      if (static_cast<int>(r.size()) - 1 > max_image_length) continue;
      std::map<int, int> count;
      for (int v : r) ++count[v > 0 ? v : -v];
      for (int v : r) {
        int g = v > 0 ? v : -v;
        if (count[g] == 1) return {static_cast<int>(ri), g};
      }
    }
    return {-1, 0};
  }
};

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p,
                                  const TietzeLimits& limits) {
  TietzeState st;
  st.labels = p.labels;
  if (static_cast<int>(st.labels.size()) != p.generators) {
    st.labels.clear();
    for (int i = 1; i <= p.generators; ++i)
      st.labels.push_back("G" + std::to_string(i));
  }
  for (const FreeWord& r : p.relators) st.relators.push_back(iword_of(r));
  st.tidy();

  for (int pass = 0; pass < limits.max_passes; ++pass) {
    bool changed = false;

    // Generator eliminations, cheapest relator first.
    while (true) {
      auto [ri, g] = st.find_eliminable(limits.max_image_length);
      if (ri < 0) break;
      IWord r = st.relators[ri];
      size_t pos = 0;
      while (pos < r.size() && r[pos] != g && r[pos] != -g) ++pos;
      IWord rot(r.begin() + pos, r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + pos);
      if (rot[0] == -g) rot = iinverse(rot);
      // rot = g w  =>  g = w^-1
      IWord image = iinverse(IWord(rot.begin() + 1, rot.end()));
      st.relators.erase(st.relators.begin() + ri);
      st.eliminate(g, image);
      st.tidy();
      changed = true;
      if (st.total_length() > limits.max_total_length) {
        st.not_minimal = true;
        break;
      }
    }
    if (st.not_minimal) break;

    // Overlap rewriting: a majority piece of one relator occurring inside
    // another is replaced by the strictly shorter complement.
    bool rewrote = true;
    while (rewrote) {
      rewrote = false;
      for (size_t si = 0; si < st.relators.size() && !rewrote; ++si) {
        const IWord s = st.relators[si];
        if (s.size() < 2) continue;
        const size_t piece = s.size() / 2 + 1;
        for (const IWord& u : {s, iinverse(s)}) {
          for (size_t rot = 0; rot < u.size() && !rewrote; ++rot) {
            IWord v(u.begin() + rot, u.end());
            v.insert(v.end(), u.begin(), u.begin() + rot);
            IWord pat(v.begin(), v.begin() + piece);
            IWord repl = iinverse(IWord(v.begin() + piece, v.end()));
            for (size_t ti = 0; ti < st.relators.size() && !rewrote; ++ti) {
              if (ti == si) continue;
              const IWord& r = st.relators[ti];
              if (r.size() < pat.size()) continue;
              auto it = std::search(r.begin(), r.end(), pat.begin(), pat.end());
              if (it == r.end()) continue;
              IWord out(r.begin(), it);
              out.insert(out.end(), repl.begin(), repl.end());
              out.insert(out.end(), it + pat.size(), r.end());
              ireduce(out);
              st.relators[ti] = std::move(out);
              st.tidy();
              rewrote = true;
              changed = true;
            }
          }
          if (rewrote) break;
        }
      }
    }

    if (!changed) {
      GroupPresentation out;
      out.generators = st.gens();
      out.labels = st.labels;
      out.not_minimal = false;
      for (const IWord& r : st.relators)
        out.add_relator(word_of(r, out.generators));
      return out;
    }
    if (pass == limits.max_passes - 1) st.not_minimal = true;
  }

  GroupPresentation out;
  out.generators = st.gens();
  out.labels = st.labels;
  out.not_minimal = st.not_minimal;
  for (const IWord& r : st.relators) out.add_relator(word_of(r, out.generators));
  return out;
}

/* ---------------------------------------------------------- Todd-Coxeter */

namespace {

struct Enumerator {
  int ngens;
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> table;  // -1 = undefined
  std::vector<int> parent;              // union-find over cosets
  std::deque<std::pair<int, int>> deductions;  // (coset, column)
  std::deque<std::pair<int, int>> coincidences;
  std::vector<std::vector<IWord>> by_column;  // relator rotations, as columns
  bool overflow = false;

  static int col_of(int v) { return v > 0 ? 2 * (v - 1) : 2 * (-v - 1) + 1; }
  static int inv_col(int c) { return c ^ 1; }

  int rep(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  int entry(int c, int col) {
    int v = table[c][col];
    if (v < 0) return -1;
    v = rep(v);
    table[c][col] = v;
    return v;
  }

  int new_coset() {
    if (static_cast<int>(table.size()) >= max_cosets) {
      overflow = true;
      return -1;
    }
    table.emplace_back(ncols, -1);
    parent.push_back(static_cast<int>(table.size()) - 1);
    return static_cast<int>(table.size()) - 1;
  }

  void set_edge(int a, int col, int b) {
    a = rep(a);
    b = rep(b);
    int cur = entry(a, col);
    if (cur >= 0) {
      if (cur != b) coincidences.emplace_back(cur, b);
      return;
    }
    table[a][col] = b;
    deductions.emplace_back(a, col);
    int back = entry(b, inv_col(col));
    if (back < 0) {
      table[b][inv_col(col)] = a;
      deductions.emplace_back(b, inv_col(col));
    } else if (back != a) {
      coincidences.emplace_back(back, a);
    }
  }

  void merge_all() {
    while (!coincidences.empty()) {
      auto [x, y] = coincidences.front();
      coincidences.pop_front();
      x = rep(x);
      y = rep(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent[y] = x;
      for (int col = 0; col < ncols; ++col) {
        int d = table[y][col];
        if (d < 0) continue;
        table[y][col] = -1;
        set_edge(x, col, rep(d));
      }
    }
  }

  void scan(int start, const IWord& w) {
    int f = rep(start);
    size_t i = 0;
    while (i < w.size()) {
      int nxt = entry(f, col_of(w[i]));
      if (nxt < 0) break;
      f = nxt;
      ++i;
    }
    if (i == w.size()) {
      if (f != rep(start)) coincidences.emplace_back(f, rep(start));
      return;
    }
    int b = rep(start);
    size_t j = w.size();
    while (j > i) {
      int nxt = entry(b, inv_col(col_of(w[j - 1])));
      if (nxt < 0) break;
      b = nxt;
      --j;
    }
    if (j == i) {
      coincidences.emplace_back(f, b);
    } else if (j == i + 1) {
      set_edge(f, col_of(w[i]), b);
    }
    // gap of two or more: no information yet
  }

  void scan_and_fill(int start, const IWord& w) {
    while (true) {
      merge_all();
      int f = rep(start);
      size_t i = 0;
      while (i < w.size()) {
        int nxt = entry(f, col_of(w[i]));
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i == w.size()) {
        if (f != rep(start)) {
          coincidences.emplace_back(f, rep(start));
          merge_all();
        }
        return;
      }
      int b = rep(start);
      size_t j = w.size();
      while (j > i) {
        int nxt = entry(b, inv_col(col_of(w[j - 1])));
        if (nxt < 0) break;
        b = nxt;
        --j;
      }
      if (j == i) {
        coincidences.emplace_back(f, b);
        merge_all();
        return;
      }
      if (j == i + 1) {
        set_edge(f, col_of(w[i]), b);
        continue;
      }
      int fresh = new_coset();
      if (fresh < 0) return;
      set_edge(f, col_of(w[i]), fresh);
    }
  }

  void process_deductions() {
    while (!deductions.empty() || !coincidences.empty()) {
      merge_all();
      if (deductions.empty()) break;
      auto [c, col] = deductions.front();
      deductions.pop_front();
      if (rep(c) != c) continue;  // stale
      if (table[c][col] < 0) continue;
      for (const IWord& w : by_column[col]) scan(c, w);
    }
  }
};

}  // namespace

int CosetTable::index() const {
  if (!complete) throw Error("coset table is not complete");
  return cosets();
}

std::string CosetTable::tsv() const {
  std::ostringstream os;
  os << "coset";
  for (int j = 1; j <= presentation.generators; ++j)
    os << "\tx" << j << "\tx" << j << "^-1";
  os << "\n";
  for (size_t c = 0; c < rows.size(); ++c) {
    os << c;
    for (int v : rows[c]) os << '\t' << v;
    os << "\n";
  }
  return os.str();
}

CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<FreeWord>& subgroup_gens,
                        int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: bad bound");
  for (const FreeWord& w : subgroup_gens)
    if (w.rank() != p.generators)
      throw std::invalid_argument("todd_coxeter: subgroup word rank mismatch");

  Enumerator e;
  e.ngens = p.generators;
  e.ncols = 2 * p.generators;
  e.max_cosets = max_cosets;
  e.by_column.resize(std::max(1, e.ncols));

  // Rotations of every cyclically reduced relator and its inverse, grouped
  // by first letter; scanning one of these at a coset checks the relator
  // loop through every edge it could close.
  std::set<std::pair<int, IWord>> seen;
  for (const FreeWord& r0 : p.relators) {
    IWord r = iword_of(r0.cyclically_reduced());
    if (r.empty()) continue;
    for (const IWord& base : {r, iinverse(r)}) {
      for (size_t rot = 0; rot < base.size(); ++rot) {
        IWord w(base.begin() + rot, base.end());
        w.insert(w.end(), base.begin(), base.begin() + rot);
        int col = Enumerator::col_of(w[0]);
        if (seen.insert({col, w}).second) e.by_column[col].push_back(w);
      }
    }
  }

  e.new_coset();  // coset 0 = the subgroup
  for (const FreeWord& w0 : subgroup_gens) {
    IWord w = iword_of(w0);
    if (w.empty()) continue;
    e.scan_and_fill(0, w);
    if (e.overflow) break;
  }
  e.process_deductions();

  int cursor_coset = 0, cursor_col = 0;
  while (!e.overflow) {
    // Find the first hole in scanning order.
    bool found = false;
    while (cursor_coset < static_cast<int>(e.table.size())) {
      if (e.rep(cursor_coset) != cursor_coset) {
        ++cursor_coset;
        cursor_col = 0;
        continue;
      }
      while (cursor_col < e.ncols && e.entry(cursor_coset, cursor_col) >= 0)
        ++cursor_col;
      if (cursor_col < e.ncols) {
        found = true;
        break;
      }
      ++cursor_coset;
      cursor_col = 0;
    }
    if (!found) break;
    int fresh = e.new_coset();
    if (fresh < 0) break;
    e.set_edge(cursor_coset, cursor_col, fresh);
    e.process_deductions();
  }

  CosetTable out;
  out.presentation = p;
  out.subgroup = subgroup_gens;
  out.max_cosets = max_cosets;
  out.complete = !e.overflow;

  if (!out.complete) return out;

  // Standardize: breadth-first renumbering from coset 0 over columns in
  // order, so equal enumerations yield byte-equal tables.
  std::vector<int> number(e.table.size(), -1);
  std::vector<int> order;
  int root = e.rep(0);
  number[root] = 0;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int col = 0; col < e.ncols; ++col) {
      int d = e.entry(c, col);
      assert(d >= 0);
      if (number[d] < 0) {
        number[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  out.rows.assign(order.size(), std::vector<int>(e.ncols, -1));
  for (size_t i = 0; i < order.size(); ++i)
    for (int col = 0; col < e.ncols; ++col)
      out.rows[i][col] = number[e.entry(order[i], col)];
  return out;
}

/* ------------------------------------------------- Reidemeister-Schreier */

GroupPresentation reidemeister_schreier(const CosetTable& t) {
  if (!t.complete)
    throw std::invalid_argument(
        "reidemeister_schreier: coset table must be complete");
  const int n = t.cosets();
  const int g = t.presentation.generators;

  // Schreier tree by BFS over columns in order; tree edges carry trivial
  // Schreier generators.
  std::vector<int> tree_parent(n, -1), tree_col(n, -1);
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  seen[0] = true;
  order.push_back(0);
  for (size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int col = 0; col < 2 * g; ++col) {
      int d = t.rows[c][col];
      if (!seen[d]) {
        seen[d] = true;
        tree_parent[d] = c;
        tree_col[d] = col;
        order.push_back(d);
      }
    }
  }

  // Positive edge (c, j): Schreier generator T(c) x_j T(c x_j)^-1.
  // Tree edges give the identity; the rest are numbered in row order.
  std::vector<std::vector<int>> sgen(n, std::vector<int>(g, 0));
  for (int d = 1; d < n; ++d) {
    int c = tree_parent[d], col = tree_col[d];
    if (col % 2 == 0)
      sgen[c][col / 2] = -1;  // marks a tree edge, id generator
    else
      sgen[d][col / 2] = -1;  // discovered along an inverse edge
  }
  int count = 0;
  std::vector<std::string> labels;
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < g; ++j)
      if (sgen[c][j] == 0) {
        sgen[c][j] = ++count;
        labels.push_back("S" + std::to_string(c) + "_" + std::to_string(j + 1));
      }

  GroupPresentation out;
  out.generators = count;
  out.labels = std::move(labels);

  // Rewrite each relator conjugate T(c) r T(c)^-1 through the table.
  for (int c = 0; c < n; ++c) {
    for (const FreeWord& r : t.presentation.relators) {
      std::vector<Letter> word;
      int y = c;
      for (const Letter& l : r.letters()) {
        if (l.sign > 0) {
          int s = sgen[y][l.gen - 1];
          if (s > 0) word.push_back({s, 1});
          y = t.rows[y][2 * (l.gen - 1)];
        } else {
          y = t.rows[y][2 * (l.gen - 1) + 1];
          int s = sgen[y][l.gen - 1];
          if (s > 0) word.push_back({s, -1});
        }
      }
      out.add_relator(FreeWord(count, std::move(word)));
    }
  }
  return out;
}

HomCheck verify_hom(const GroupPresentation& p,
                    const std::vector<Permutation>& images) {
  if (static_cast<int>(images.size()) != p.generators)
    throw std::invalid_argument("verify_hom: need one image per generator");
  for (const Permutation& q : images)
    if (q.degree() != images[0].degree())
      throw std::invalid_argument("verify_hom: mixed degrees");
  HomCheck out;
  out.ok = true;
  for (size_t i = 0; i < p.relators.size(); ++i) {
    Permutation acc = Permutation::identity(images[0].degree());
    for (const Letter& l : p.relators[i].letters()) {
      const Permutation& im = images[l.gen - 1];
      acc = acc.then(l.sign > 0 ? im : im.inverse());
    }
    if (!acc.is_identity()) {
      out.ok = false;
      out.bad_relator = static_cast<int>(i) + 1;
      break;
    }
  }
  out.transitive = transitive_on(images, images[0].degree());
  return out;
}

}  // namespace vklab
