#include "tracelab/intlinalg.hpp"

#include "tracelab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tracelab {

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMat out(n, std::vector<Int>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

IntMat transpose(const IntMat& a) {
  std::size_t n = a.size(), m = n ? a[0].size() : 0;
  IntMat out(m, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

IntMat hnf_basis(IntMat rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::vector<Int>& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](const Int& x) { return x == 0; });
                            }),
             rows.end());
  if (rows.empty()) return {};
  std::size_t n = rows.size(), m = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    // Euclid all entries of column c (rows >= r) into a single pivot.
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (rows[i][c] != 0 && (best == n || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == n) break;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < m; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < m; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      // floor division keeps entries above the pivot in [0, pivot)
      Int q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = 0; j < m; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

namespace {

struct SnfWork {
  IntMat a, u, uinv, v;
  std::size_t n, m;

  void row_op(std::size_t i, std::size_t j, const Int& q) {  // row i -= q * row j
    for (std::size_t k = 0; k < m; ++k) a[i][k] -= q * a[j][k];
    for (std::size_t k = 0; k < n; ++k) u[i][k] -= q * u[j][k];
    for (std::size_t k = 0; k < n; ++k) uinv[k][j] += q * uinv[k][i];
  }
  void col_op(std::size_t j, std::size_t i, const Int& q) {  // col j -= q * col i
    for (std::size_t k = 0; k < n; ++k) a[k][j] -= q * a[k][i];
    for (std::size_t k = 0; k < m; ++k) v[k][j] -= q * v[k][i];
  }
  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (std::size_t k = 0; k < n; ++k) std::swap(uinv[k][i], uinv[k][j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    for (std::size_t k = 0; k < m; ++k) std::swap(v[k][i], v[k][j]);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < m; ++k) a[i][k] = -a[i][k];
    for (std::size_t k = 0; k < n; ++k) u[i][k] = -u[i][k];
    for (std::size_t k = 0; k < n; ++k) uinv[k][i] = -uinv[k][i];
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& input) {
  SmithForm out;
  out.rows = input.size();
  out.cols = out.rows ? input[0].size() : 0;
  SnfWork w{input, identity_matrix(out.rows), identity_matrix(out.rows),
            identity_matrix(out.cols), out.rows, out.cols};
  std::size_t t = 0;
  while (t < std::min(w.n, w.m)) {
    // smallest non-zero pivot in the remaining block
    std::size_t pi = w.n, pj = w.m;
    for (std::size_t i = t; i < w.n; ++i)
      for (std::size_t j = t; j < w.m; ++j)
        if (w.a[i][j] != 0 && (pi == w.n || abs(w.a[i][j]) < abs(w.a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == w.n) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < w.n; ++i) {
        if (w.a[i][t] == 0) continue;
        Int q = w.a[i][t] / w.a[t][t];
        w.row_op(i, t, q);
        if (w.a[i][t] != 0) {
          w.row_swap(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < w.m; ++j) {
        if (w.a[t][j] == 0) continue;
        Int q = w.a[t][j] / w.a[t][t];
        w.col_op(j, t, q);
        if (w.a[t][j] != 0) {
          w.col_swap(t, j);
          dirty = true;
        }
      }
    }
    // pivot must divide the rest of the block, else absorb an offending row
    bool restart = false;
    for (std::size_t i = t + 1; i < w.n && !restart; ++i)
      for (std::size_t j = t + 1; j < w.m && !restart; ++j)
        if (w.a[i][j] % w.a[t][t] != 0) {
          w.row_op(t, i, Int(-1));  // row t += row i
          restart = true;
        }
    if (restart) continue;
    if (w.a[t][t] < 0) w.row_negate(t);
    ++t;
  }
  out.rank = t;
  out.diag.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.diag.push_back(w.a[i][i]);
  out.U = std::move(w.u);
  out.Uinv = std::move(w.uinv);
  out.V = std::move(w.v);
  return out;
}

std::string AbelianStructure::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    first = false;
    os << "Z/" << d;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    first = false;
    os << "Z^" << free_rank;
  }
  if (first) os << "0";
  return os.str();
}

AbelianStructure cokernel_structure(const IntMat& relations, std::size_t cols) {
  AbelianStructure s;
  if (relations.empty()) {
    s.free_rank = cols;
    return s;
  }
  SmithForm snf = smith_normal_form(relations);
  for (const Int& d : snf.diag)
    if (d != 1) s.torsion.push_back(d);
  s.free_rank = cols - snf.rank;
  return s;
}

std::optional<std::vector<Int>> coords_in_basis(const IntMat& hnf, const std::vector<Int>& v) {
  std::vector<Int> rem = v;
  std::vector<Int> coords(hnf.size());
  for (std::size_t i = 0; i < hnf.size(); ++i) {
    std::size_t lead = 0;
    while (lead < hnf[i].size() && hnf[i][lead] == 0) ++lead;
    Int q = rem[lead] / hnf[i][lead];
    if (rem[lead] % hnf[i][lead] != 0) return std::nullopt;
    coords[i] = q;
    for (std::size_t j = lead; j < rem.size(); ++j) rem[j] -= q * hnf[i][j];
  }
  for (const Int& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace tracelab
