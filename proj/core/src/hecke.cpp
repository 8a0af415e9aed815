#include "rhc/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rhc {

std::string multiplicity_str(const MultiplicityVector& mv) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, m] : mv) {
    if (!first) os << ", ";
    first = false;
    os << a.str() << ":" << m;
  }
  os << '}';
  return os.str();
}

int HeckeModule::word_index(const Word& w) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it != basis.end() && *it == w) return static_cast<int>(it - basis.begin());
  return -1;
}

PiBarResult pi_bar(const GeneralizedRibbon& shape, const Word& w, int i) {
  int n = static_cast<int>(w.size());
  if (i < 1 || i > n - 1) throw std::invalid_argument("pi_bar: generator index out of range");
  int pos_i = -1, pos_j = -1;
  for (int t = 0; t < n; ++t) {
    if (w[t] == i) pos_i = t;
    else if (w[t] == i + 1) pos_j = t;
  }
  int row_i = shape.cells()[pos_i].row;
  int row_j = shape.cells()[pos_j].row;
  if (row_i > row_j) return {-1, std::nullopt};
  if (row_i == row_j) return {0, std::nullopt};
  Word swapped = w;
  std::swap(swapped[pos_i], swapped[pos_j]);
  return {+1, std::move(swapped)};
}

HeckeModule build_projective(const std::vector<Composition>& components) {
  HeckeModule m;
  for (const auto& c : components)
    if (!c.empty()) m.shape.push_back(c);  // the empty composition is the unit
  m.diagram = GeneralizedRibbon::from_components(m.shape);
  m.n = m.diagram.size();
  m.basis = enumerate_srt_words(m.diagram);
  m.dim = static_cast<int>(m.basis.size());
  m.gens.reserve(std::max(0, m.n - 1));
  for (int i = 1; i <= m.n - 1; ++i) {
    SparseMatrix g(m.dim, m.dim);
    for (int t = 0; t < m.dim; ++t) {
      PiBarResult r = pi_bar(m.diagram, m.basis[t], i);
      if (r.scalar == -1) {
        g.set(t, t, Rational(-1));
      } else if (r.scalar == +1) {
        int idx = m.word_index(*r.image);
        if (idx < 0) throw std::logic_error("build_projective: swap left the basis");
        g.set(idx, t, Rational(1));
      }
    }
    m.gens.push_back(std::move(g));
  }
  return m;
}

HeckeModule simple_module(const Composition& alpha) {
  HeckeModule m;
  m.n = alpha.size();
  m.dim = 1;
  // the stable tableau whose action scalars are -1 exactly on Des(alpha)
  // lives in the reversed shape
  if (!alpha.empty()) m.basis = {tau1(reverse(alpha)).word};
  DescentSet des = descent_set(alpha);
  for (int i = 1; i <= m.n - 1; ++i) {
    SparseMatrix g(1, 1);
    if (des.contains(i)) g.set(0, 0, Rational(-1));
    m.gens.push_back(std::move(g));
  }
  return m;
}

namespace {
std::map<std::vector<Composition>, long>& srt_count_cache() {
  static std::map<std::vector<Composition>, long> cache;
  return cache;
}
std::mutex& srt_count_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

long dim_projective(const std::vector<Composition>& components) {
  std::lock_guard<std::mutex> lock(srt_count_mutex());
  auto& cache = srt_count_cache();
  auto it = cache.find(components);
  if (it != cache.end()) return it->second;
  long count = count_srt(GeneralizedRibbon::from_components(components));
  cache.emplace(components, count);
  return count;
}

long dim_projective(const Composition& alpha) {
  if (alpha.empty()) return 1;
  return dim_projective(std::vector<Composition>{alpha});
}

RelationReport verify_relations(const HeckeModule& m) {
  RelationReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.violations.push_back(what);
  };
  int g = static_cast<int>(m.gens.size());
  for (int i = 1; i <= g; ++i) {
    if (!(m.gen(i) * m.gen(i) == m.gen(i).scaled(Rational(-1))))
      fail("pi_" + std::to_string(i) + "^2 != -pi_" + std::to_string(i));
  }
  for (int i = 1; i + 1 <= g; ++i) {
    if (!(m.gen(i) * m.gen(i + 1) * m.gen(i) == m.gen(i + 1) * m.gen(i) * m.gen(i + 1)))
      fail("braid relation fails at i=" + std::to_string(i));
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = i + 2; j <= g; ++j) {
      if (!(m.gen(i) * m.gen(j) == m.gen(j) * m.gen(i)))
        fail("commutation fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return report;
}

ParabolicRestriction restrict_module(const HeckeModule& m, int k) {
  if (k < 0 || k > m.n) throw std::invalid_argument("restrict_module: k out of range");
  ParabolicRestriction out;
  out.left.n = k;
  out.left.dim = m.dim;
  out.left.basis = m.basis;
  out.left.shape = m.shape;
  out.left.diagram = m.diagram;
  for (int i = 1; i <= k - 1; ++i) out.left.gens.push_back(m.gen(i));
  out.right.n = m.n - k;
  out.right.dim = m.dim;
  out.right.basis = m.basis;
  out.right.shape = m.shape;
  out.right.diagram = m.diagram;
  for (int i = k + 1; i <= m.n - 1; ++i) out.right.gens.push_back(m.gen(i));
  return out;
}

bool is_equivariant(const ModuleMap& f, std::string* why) {
  if (f.source.n != f.target.n) {
    if (why) *why = "modules over different algebras";
    return false;
  }
  for (int i = 1; i <= f.source.n - 1; ++i) {
    if (!(f.matrix * f.source.gen(i) == f.target.gen(i) * f.matrix)) {
      if (why) *why = "fails to commute with pi_" + std::to_string(i);
      return false;
    }
  }
  return true;
}

int hom_dim_to_simple(const HeckeModule& m, const Composition& gamma) {
  if (gamma.size() != m.n)
    throw std::invalid_argument("hom_dim_to_simple: size mismatch");
  if (m.dim == 0) return 0;
  if (m.n <= 1) return m.dim;
  DescentSet des = descent_set(gamma);
  // intersect ker(gen_i^T - lambda_i) one generator at a time; the candidate
  // space usually collapses after a generator or two
  SparseMatrix basis = SparseMatrix::identity(m.dim);  // columns span the space
  for (int i = 1; i <= m.n - 1 && basis.cols() > 0; ++i) {
    SparseMatrix block = m.gen(i).transpose();
    if (des.contains(i)) block = block + SparseMatrix::identity(m.dim);
    SparseMatrix constrained = block * basis;
    basis = basis * constrained.kernel_basis().transpose();
  }
  return basis.cols();
}

int hom_dim(const HeckeModule& a, const HeckeModule& b) {
  if (a.n != b.n) throw std::invalid_argument("hom_dim: modules over different algebras");
  if (a.dim == 0 || b.dim == 0) return 0;
  if (a.n <= 1) return a.dim * b.dim;
  int unknowns = b.dim * a.dim;  // F[r, c] at index r * a.dim + c
  int rows_per_gen = b.dim * a.dim;
  SparseMatrix system((a.n - 1) * rows_per_gen, unknowns);
  for (int i = 1; i <= a.n - 1; ++i) {
    int base = (i - 1) * rows_per_gen;
    // (F * genA - genB * F)[r, c] = 0
    for (int k = 0; k < a.dim; ++k) {
      for (const auto& [c, v] : a.gen(i).row(k)) {
        // F[r, k] * genA[k, c] contributes to equation (r, c)
        for (int r = 0; r < b.dim; ++r) {
          int eq = base + r * a.dim + c;
          int un = r * a.dim + k;
          system.set(eq, un, system.get(eq, un) + v);
        }
      }
    }
    for (int r = 0; r < b.dim; ++r) {
      for (const auto& [k, v] : b.gen(i).row(r)) {
        // genB[r, k] * F[k, c] contributes negatively to equation (r, c)
        for (int c = 0; c < a.dim; ++c) {
          int eq = base + r * a.dim + c;
          int un = k * a.dim + c;
          system.set(eq, un, system.get(eq, un) - v);
        }
      }
    }
  }
  return unknowns - system.rank();
}

MultiplicityVector decompose_projective(const HeckeModule& m) {
  // Walk the generators once, branching on the scalar each functional must
  // satisfy (0 or -1); a branch carries the joint kernel so far and dies as
  // soon as it is empty. This visits every simple's functional system while
  // sharing the common prefixes.
  MultiplicityVector mv;
  long total = 0;
  std::vector<SparseMatrix> t, tp;
  for (int i = 1; i <= m.n - 1; ++i) {
    t.push_back(m.gen(i).transpose());
    tp.push_back(t.back() + SparseMatrix::identity(m.dim));
  }
  std::vector<int> descents;
  auto rec = [&](auto&& self, int i, const SparseMatrix& basis) -> void {
    if (basis.cols() == 0) return;
    if (i > m.n - 1) {
      Composition gamma = composition_of_descents(DescentSet(m.n, descents));
      mv[gamma] += basis.cols();
      total += static_cast<long>(basis.cols()) * dim_projective(gamma);
      return;
    }
    self(self, i + 1, basis * (t[i - 1] * basis).kernel_basis().transpose());
    descents.push_back(i);
    self(self, i + 1, basis * (tp[i - 1] * basis).kernel_basis().transpose());
    descents.pop_back();
  };
  rec(rec, 1, SparseMatrix::identity(m.dim));
  if (total != m.dim)
    throw std::logic_error("decompose_projective: dimension accounting failed (" +
                           std::to_string(total) + " vs " + std::to_string(m.dim) +
                           "); input is not projective");
  return mv;
}

NSymElem ch_nsym(const HeckeModule& m) {
  NSymElem out{NBasis::R, {}};
  for (const auto& [gamma, mult] : decompose_projective(m))
    out.add_term(gamma, Rational(mult));
  return out;
}

QSymElem ch_qsym(const HeckeModule& m) {
  QSymElem out{QBasis::L, {}};
  for (const auto& gamma : compositions_of(m.n)) {
    int h = hom_dim(build_projective({gamma}), m);
    if (h > 0) out.add_term(gamma, Rational(h));
  }
  return out;
}

HeckeModule direct_sum(int n, const std::vector<HeckeModule>& parts,
                       std::vector<int>* offsets) {
  HeckeModule out;
  out.n = n;
  for (const auto& p : parts) {
    if (offsets) offsets->push_back(out.dim);
    out.dim += p.dim;
  }
  for (int i = 1; i <= n - 1; ++i) {
    SparseMatrix g(0, 0);
    for (const auto& p : parts) g = SparseMatrix::direct_sum(g, p.gen(i));
    out.gens.push_back(std::move(g));
  }
  return out;
}

namespace {

// x - (components along pivot rows of rref); result has zeros at pivots.
SparseRow reduce_by_rref(SparseRow x, const SparseMatrix& rref,
                         const std::vector<int>& pivot_cols) {
  for (size_t i = 0; i < pivot_cols.size(); ++i) {
    int p = pivot_cols[i];
    auto it = std::lower_bound(x.begin(), x.end(), p,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != x.end() && it->first == p)
      x = add_rows(x, rref.row(static_cast<int>(i)), -it->second);
  }
  return x;
}

// a * x for a sparse column vector x given as (index, value) pairs.
SparseRow matrix_times_sparse_vec(const SparseMatrix& a, const SparseRow& x) {
  SparseRow out;
  for (int r = 0; r < a.rows(); ++r) {
    Rational acc(0);
    const auto& row = a.row(r);
    size_t i = 0, j = 0;
    while (i < row.size() && j < x.size()) {
      if (row[i].first < x[j].first) ++i;
      else if (row[i].first > x[j].first) ++j;
      else { acc += row[i].second * x[j].second; ++i; ++j; }
    }
    if (!acc.is_zero()) out.emplace_back(r, acc);
  }
  return out;
}

}  // namespace

HeckeModule submodule_from_basis(const HeckeModule& m, const SparseMatrix& span) {
  int s = span.rows();
  HeckeModule out;
  out.n = m.n;
  out.dim = s;
  if (s == 0) {
    for (int i = 1; i <= m.n - 1; ++i) out.gens.emplace_back(0, 0);
    return out;
  }
  SparseMatrix basis_t = span.transpose();  // dim x s
  for (int i = 1; i <= m.n - 1; ++i) {
    SparseMatrix image = m.gen(i) * basis_t;  // dim x s
    SparseMatrix aug = SparseMatrix::hstack(basis_t, image);
    auto ech = aug.echelon();
    SparseMatrix induced(s, s);
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      if (ech.pivot_cols[r] >= s)
        throw std::logic_error("submodule_from_basis: span is not action-stable");
      for (const auto& [c, v] : ech.rref.row(static_cast<int>(r)))
        if (c >= s) induced.set(ech.pivot_cols[r], c - s, v);
    }
    out.gens.push_back(std::move(induced));
  }
  return out;
}

HeckeModule quotient_module(const HeckeModule& m, const SparseMatrix& relations,
                            const std::vector<int>& keep, int new_n) {
  auto ech = relations.echelon();
  std::vector<bool> is_pivot(m.dim, false);
  for (int p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<int> free_cols;
  std::vector<int> coord_of(m.dim, -1);
  for (int c = 0; c < m.dim; ++c) {
    if (!is_pivot[c]) {
      coord_of[c] = static_cast<int>(free_cols.size());
      free_cols.push_back(c);
    }
  }
  int q = static_cast<int>(free_cols.size());

  HeckeModule out;
  out.n = new_n;
  out.dim = q;

  if (static_cast<int>(keep.size()) != std::max(0, new_n - 1))
    throw std::invalid_argument("quotient_module: generator count does not match new_n");

  for (int g : keep) {
    // the action must map the relation span into itself
    for (size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      SparseRow image = matrix_times_sparse_vec(m.gen(g), ech.rref.row(static_cast<int>(i)));
      if (!reduce_by_rref(std::move(image), ech.rref, ech.pivot_cols).empty())
        throw std::logic_error("quotient_module: action does not descend to the quotient");
    }
    SparseMatrix gt = m.gen(g).transpose();
    SparseMatrix induced(q, q);
    for (int j = 0; j < q; ++j) {
      SparseRow col(gt.row(free_cols[j]));
      col = reduce_by_rref(std::move(col), ech.rref, ech.pivot_cols);
      for (const auto& [c, v] : col) {
        if (coord_of[c] < 0) throw std::logic_error("quotient_module: reduction failed");
        induced.set(coord_of[c], j, v);
      }
    }
    out.gens.push_back(std::move(induced));
  }
  return out;
}

}  // namespace rhc
