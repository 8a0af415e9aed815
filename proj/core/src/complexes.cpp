#include "rhc/complexes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rhc {

namespace {

// Word-level map between projectives on shapes with identical traversal
// semantics: each source basis word either appears in the target basis
// (entry 1) or maps to zero. Both partial_map and mu_map have this form.
SparseMatrix word_identity_matrix(const HeckeModule& source, const HeckeModule& target) {
  SparseMatrix m(target.dim, source.dim);
  for (int t = 0; t < source.dim; ++t) {
    int idx = target.word_index(source.basis[t]);
    if (idx >= 0) m.set(idx, t, Rational(1));
  }
  return m;
}

}  // namespace

ModuleMap partial_map(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("partial_map: compositions must be nonempty");
  ModuleMap f;
  f.source = build_projective({concat(a, b)});
  f.target = build_projective({a, b});
  f.matrix = word_identity_matrix(f.source, f.target);
  return f;
}

ModuleMap mu_map(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("mu_map: compositions must be nonempty");
  ModuleMap f;
  f.source = build_projective({a, b});
  f.target = build_projective({near_concat(a, b)});
  f.matrix = word_identity_matrix(f.source, f.target);
  return f;
}

SparseMatrix mu_section(const ModuleMap& mu) {
  // translate up: on words, the identity embedding of the target basis
  return word_identity_matrix(mu.target, mu.source);
}

SES build_ses(const Composition& a, const Composition& b) {
  SES s;
  s.alpha = a;
  s.beta = b;
  s.inject = partial_map(a, b);
  s.project = mu_map(a, b);
  s.left = s.inject.source;
  s.middle = s.inject.target;
  s.right = s.project.target;
  return s;
}

SESReport verify_ses(const SES& s) {
  SESReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  if (s.middle.dim != s.left.dim + s.right.dim) fail("dim middle != dim left + dim right");
  if (s.inject.matrix.rank() != s.left.dim) fail("partial map is not injective");
  if (s.project.matrix.rank() != s.right.dim) fail("mu map is not surjective");
  if (!(s.project.matrix * s.inject.matrix).is_zero()) fail("mu o partial != 0");
  // with mu*partial = 0 and the rank equalities, im(partial) = ker(mu)
  std::string why;
  if (!is_equivariant(s.inject, &why)) fail("partial map not equivariant: " + why);
  if (!is_equivariant(s.project, &why)) fail("mu map not equivariant: " + why);
  SparseMatrix section = mu_section(s.project);
  if (!(s.project.matrix * section == SparseMatrix::identity(s.right.dim)))
    fail("translate-up section is not a section of mu");
  return report;
}

int sign(int j, const std::vector<int>& index_set) {
  int below = 0;
  for (int i : index_set) {
    if (i == j) throw std::invalid_argument("sign: j belongs to the index set");
    if (i < j) ++below;
  }
  return below % 2 == 0 ? 1 : -1;
}

SparseMatrix phi_matrix(const HeckeModule& source, const HeckeModule& target) {
  return word_identity_matrix(source, target);
}

std::vector<std::vector<int>> colex_subsets(int l_minus_1, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // colex order: recurse on the largest element
  auto rec = [&](auto&& self, int max_elem, int k) -> void {
    if (k == 0) {
      std::vector<int> subset(cur.rbegin(), cur.rend());
      out.push_back(std::move(subset));
      return;
    }
    for (int top = k; top <= max_elem; ++top) {
      cur.push_back(top);
      self(self, top - 1, k - 1);
      cur.pop_back();
    }
  };
  rec(rec, l_minus_1, size);
  return out;
}

CochainComplex build_ribbon_complex(const std::vector<Composition>& seq) {
  if (seq.empty()) throw std::invalid_argument("build_ribbon_complex: empty sequence");
  for (const auto& c : seq)
    if (c.empty()) throw std::invalid_argument("build_ribbon_complex: empty component");
  int l = static_cast<int>(seq.size());

  CochainComplex cx;
  cx.seq = seq;
  for (const auto& c : seq) cx.n += c.size();

  for (int deg = 0; deg <= l - 1; ++deg) {
    ComplexTerm term;
    term.index_sets = colex_subsets(l - 1, deg);
    for (const auto& I : term.index_sets) {
      term.offsets.push_back(term.dim);
      term.summands.push_back(build_projective(apply_glue_indices(seq, I)));
      term.dim += term.summands.back().dim;
    }
    cx.terms.push_back(std::move(term));
  }

  for (int deg = 0; deg + 1 <= l - 1; ++deg) {
    const ComplexTerm& src = cx.terms[deg];
    const ComplexTerm& dst = cx.terms[deg + 1];
    std::map<std::vector<int>, int> dst_index;
    for (size_t s = 0; s < dst.index_sets.size(); ++s)
      dst_index[dst.index_sets[s]] = static_cast<int>(s);
    SparseMatrix d(dst.dim, src.dim);
    for (size_t s = 0; s < src.index_sets.size(); ++s) {
      const auto& I = src.index_sets[s];
      for (int j = 1; j <= l - 1; ++j) {
        if (std::find(I.begin(), I.end(), j) != I.end()) continue;
        std::vector<int> J = I;
        J.insert(std::upper_bound(J.begin(), J.end(), j), j);
        int t = dst_index.at(J);
        SparseMatrix block =
            phi_matrix(src.summands[s], dst.summands[t]).scaled(Rational(sign(j, I)));
        d.insert_block(dst.offsets[t], src.offsets[s], block);
      }
    }
    cx.diffs.push_back(std::move(d));
  }
  return cx;
}

void verify_d_squared(const CochainComplex& c) {
  for (size_t i = 0; i + 1 < c.diffs.size(); ++i) {
    if (!(c.diffs[i + 1] * c.diffs[i]).is_zero())
      throw std::logic_error("d^2 != 0 between degrees " + std::to_string(i) + " and " +
                             std::to_string(i + 2));
  }
}

std::vector<int> cohomology_dims(const CochainComplex& c) {
  verify_d_squared(c);
  int top = static_cast<int>(c.terms.size());
  std::vector<int> ranks(top, 0);
  for (size_t i = 0; i < c.diffs.size(); ++i) ranks[i] = c.diffs[i].rank();
  std::vector<int> h(top, 0);
  for (int i = 0; i < top; ++i) {
    int ker = (i < static_cast<int>(c.diffs.size())) ? c.terms[i].dim - ranks[i] : c.terms[i].dim;
    int im_prev = (i == 0) ? 0 : ranks[i - 1];
    h[i] = ker - im_prev;
  }
  return h;
}

MultiplicityVector h0_multiplicities(const CochainComplex& c) {
  const HeckeModule& term0 = c.terms[0].summands[0];
  if (c.diffs.empty()) return decompose_projective(term0);
  SparseMatrix kernel = c.diffs[0].kernel_basis();
  HeckeModule h0 = submodule_from_basis(term0, kernel);
  return decompose_projective(h0);
}

NSymElem euler_character_nsym(const std::vector<Composition>& seq) {
  int l = static_cast<int>(seq.size());
  NSymElem total{NBasis::R, {}};
  for (int deg = 0; deg <= l - 1; ++deg) {
    for (const auto& I : colex_subsets(l - 1, deg)) {
      NSymElem prod = nsym_r(Composition());
      for (const auto& comp : apply_glue_indices(seq, I)) prod = r_product(prod, nsym_r(comp));
      total = nsym_add(total, nsym_scale(prod, Rational(deg % 2 == 0 ? 1 : -1)));
    }
  }
  return total;
}

}  // namespace rhc
