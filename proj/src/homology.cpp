#include "xpol/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace xpol {

BoundaryMatrix boundary_matrix(const Complex& K, int j) {
  if (K.is_void()) throw std::invalid_argument("void complex has no boundary matrix");
  if (j < 0 || j > K.dim())
    throw std::invalid_argument("boundary matrix degree out of range");
  return boundary_matrix(enumerate_faces(K), j);
}

BoundaryMatrix boundary_matrix(const FaceClosure& cl, int j) {
  if (j < 0 || j + 1 >= (int)cl.by_dim.size())
    throw std::invalid_argument("boundary matrix degree out of range");
  BoundaryMatrix bm;
  bm.row_faces = cl.of_dim(j - 1);
  bm.col_faces = cl.of_dim(j);
  bm.m = IntMatrix(bm.row_faces.size(), bm.col_faces.size());

  std::unordered_map<std::uint64_t, std::size_t> row_index;
  row_index.reserve(bm.row_faces.size());
  for (std::size_t r = 0; r < bm.row_faces.size(); ++r)
    row_index[bm.row_faces[r].key()] = r;

  for (std::size_t c = 0; c < bm.col_faces.size(); ++c) {
    const Face& sigma = bm.col_faces[c];
    int p = 0;
    for (const VertexLabel& v : sigma.labels()) {
      auto it = row_index.find(sigma.without(v).key());
      if (it == row_index.end())
        throw std::logic_error("closure is missing a boundary face");
      bm.m.at(it->second, c) = (p % 2 == 0) ? 1 : -1;
      ++p;
    }
  }
  return bm;
}

namespace {

void row_sub(IntMatrix& m, std::size_t r, std::size_t t, const mpz_class& q,
             std::size_t from_col) {
  // row_r -= q * row_t
  for (std::size_t c = from_col; c < m.cols; ++c) {
    const mpz_class& src = m.at(t, c);
    if (sgn(src) != 0)
      mpz_submul(m.at(r, c).get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
  }
}

void col_sub(IntMatrix& m, std::size_t c, std::size_t t, const mpz_class& q,
             std::size_t from_row) {
  // col_c -= q * col_t
  for (std::size_t r = from_row; r < m.rows; ++r) {
    const mpz_class& src = m.at(r, t);
    if (sgn(src) != 0)
      mpz_submul(m.at(r, c).get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
  }
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b, std::size_t from_col) {
  if (a == b) return;
  for (std::size_t c = from_col; c < m.cols; ++c)
    std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b, std::size_t from_row) {
  if (a == b) return;
  for (std::size_t r = from_row; r < m.rows; ++r)
    std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
  SNFResult res;
  const std::size_t n = std::min(m.rows, m.cols);
  std::size_t t = 0;
  while (t < n) {
    // Pivot: nonzero entry of minimal absolute value (early exit on ±1).
    std::size_t pr = t, pc = t;
    bool found = false, unit = false;
    for (std::size_t r = t; r < m.rows && !unit; ++r) {
      for (std::size_t c = t; c < m.cols; ++c) {
        const mpz_class& v = m.at(r, c);
        if (sgn(v) == 0) continue;
        if (!found ||
            mpz_cmpabs(v.get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
          pr = r; pc = c; found = true;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) { unit = true; break; }
        }
      }
    }
    if (!found) break;
    swap_rows(m, t, pr, t);
    swap_cols(m, t, pc, t);

    for (;;) {
      bool disturbed = false;
      for (std::size_t r = t + 1; r < m.rows; ++r) {
        if (sgn(m.at(r, t)) == 0) continue;
        mpz_class q = m.at(r, t) / m.at(t, t);  // truncated
        if (sgn(q) != 0) row_sub(m, r, t, q, t);
        if (sgn(m.at(r, t)) != 0) {  // remainder smaller than pivot
          swap_rows(m, t, r, t);
          disturbed = true;
        }
      }
      if (disturbed) continue;
      for (std::size_t c = t + 1; c < m.cols; ++c) {
        if (sgn(m.at(t, c)) == 0) continue;
        mpz_class q = m.at(t, c) / m.at(t, t);
        if (sgn(q) != 0) col_sub(m, c, t, q, t);
        if (sgn(m.at(t, c)) != 0) {
          swap_cols(m, t, c, t);
          disturbed = true;
        }
      }
      if (!disturbed) break;  // row and column of the pivot are clear
    }
    res.diagonal.push_back(abs(m.at(t, t)));
    ++t;
  }
  res.rank = res.diagonal.size();

  // Divisibility chain: diag(a,b) ~ diag(gcd(a,b), lcm(a,b)).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < res.diagonal.size(); ++i) {
      for (std::size_t j = i + 1; j < res.diagonal.size(); ++j) {
        if (mpz_divisible_p(res.diagonal[j].get_mpz_t(),
                            res.diagonal[i].get_mpz_t()))
          continue;
        mpz_class g = gcd(res.diagonal[i], res.diagonal[j]);
        mpz_class l = res.diagonal[i] / g * res.diagonal[j];
        res.diagonal[i] = g;
        res.diagonal[j] = l;
        changed = true;
      }
    }
  }
  res.diagonal.resize(n, 0);
  return res;
}

std::vector<HomologyGroup> reduced_homology(const Complex& K) {
  if (K.is_void())
    throw std::invalid_argument("reduced homology of the void complex");
  if (K.dim() == -1) return {HomologyGroup{-1, 1, {}}};

  FaceClosure cl = enumerate_faces(K);
  const int dim = K.dim();
  // ranks[j] = rank ∂_j for 0..dim (+ zero for dim+1); snf diagonals kept for
  // torsion readout.
  std::vector<std::size_t> ranks((std::size_t)dim + 2, 0);
  std::vector<std::vector<mpz_class>> diagonals((std::size_t)dim + 2);
  ranks[0] = 1;  // augmentation is onto: some vertex exists
  for (int j = 1; j <= dim; ++j) {
    SNFResult s = smith_normal_form(boundary_matrix(cl, j).m);
    ranks[(std::size_t)j] = s.rank;
    diagonals[(std::size_t)j] = std::move(s.diagonal);
  }

  std::vector<HomologyGroup> out;
  for (int j = 0; j <= dim; ++j) {
    HomologyGroup g;
    g.degree = j;
    g.rank = (long long)cl.of_dim(j).size() - (long long)ranks[(std::size_t)j] -
             (long long)ranks[(std::size_t)j + 1];
    for (const mpz_class& dk : diagonals[(std::size_t)j + 1])
      if (dk > 1) g.torsion.push_back(dk);
    out.push_back(std::move(g));
  }
  return out;
}

long long reduced_betti(const Complex& K, int j) {
  if (K.is_void())
    throw std::invalid_argument("reduced homology of the void complex");
  const int dim = K.dim();
  if (j < -1) throw std::invalid_argument("degree out of range");
  if (j == -1) return dim == -1 ? 1 : 0;
  if (j > dim) return 0;
  FaceClosure cl = enumerate_faces(K);
  std::size_t rj = (j == 0) ? 1 : smith_normal_form(boundary_matrix(cl, j).m).rank;
  std::size_t rj1 =
      (j + 1 > dim) ? 0 : smith_normal_form(boundary_matrix(cl, j + 1).m).rank;
  return (long long)cl.of_dim(j).size() - (long long)rj - (long long)rj1;
}

std::vector<long long> betti(const Complex& K) {
  std::vector<HomologyGroup> h = reduced_homology(K);
  std::vector<long long> out;
  for (const HomologyGroup& g : h) {
    if (g.degree < 0) continue;
    out.push_back(g.degree == 0 ? g.rank + 1 : g.rank);
  }
  return out;
}

}  // namespace xpol
