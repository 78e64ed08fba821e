#include "tracelab/covers.hpp"

#include "tracelab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace tracelab {

void TwoComplex::validate() const {
  for (const auto& [tail, head] : edges) {
    if (tail < 0 || tail >= vertex_count || head < 0 || head >= vertex_count)
      raise(Errc::PreconditionViolated, "edge endpoint out of range");
  }
  for (const Face& f : faces) {
    int at = -1;
    for (int step : f.boundary) {
      int e = (step > 0 ? step : -step) - 1;
      if (e < 0 || e >= static_cast<int>(edges.size()))
        raise(Errc::PreconditionViolated, "face references missing edge");
      auto [tail, head] = edges[static_cast<std::size_t>(e)];
      int from = step > 0 ? tail : head;
      int to = step > 0 ? head : tail;
      if (at >= 0 && from != at)
        raise(Errc::PreconditionViolated, "face boundary walk is not continuous");
      at = to;
    }
    if (!f.boundary.empty()) {
      int first_step = f.boundary.front();
      int e = (first_step > 0 ? first_step : -first_step) - 1;
      auto [tail, head] = edges[static_cast<std::size_t>(e)];
      int start = first_step > 0 ? tail : head;
      if (at != start) raise(Errc::PreconditionViolated, "face boundary walk is not closed");
    }
  }
}

TwoComplex TwoComplex::without_faces(RelatorOrigin origin) const {
  TwoComplex out = *this;
  out.faces.clear();
  for (const Face& f : faces)
    if (f.origin != origin) out.faces.push_back(f);
  return out;
}

TwoComplex presentation_complex(const Presentation& p) {
  TwoComplex k;
  k.vertex_count = 1;
  k.edges.assign(static_cast<std::size_t>(p.generator_count), {0, 0});
  for (const Relator& r : p.relators) k.faces.push_back({r.word, r.origin});
  return k;
}

std::array<int, 2> CoverSpec::face_image(const TwoComplex& base, const TwoComplex::Face& f) const {
  (void)base;
  std::array<int, 2> sum{0, 0};
  for (int step : f.boundary) {
    int e = (step > 0 ? step : -step) - 1;
    const auto& a = assignment[static_cast<std::size_t>(e)];
    int sgn = step > 0 ? 1 : -1;
    sum[0] = ((sum[0] + sgn * a[0]) % n + n) % n;
    sum[1] = ((sum[1] + sgn * a[1]) % n + n) % n;
  }
  return sum;
}

bool CoverSpec::kills_all_faces(const TwoComplex& base) const {
  for (const auto& f : base.faces) {
    auto s = face_image(base, f);
    if (s[0] != 0 || s[1] != 0) return false;
  }
  return true;
}

bool CoverSpec::surjective() const {
  // Z_n x Z_n is generated by the assignment values iff the subgroup they
  // generate has order n^2; brute force over the (small) subgroup.
  std::vector<bool> hit(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  hit[0] = true;
  std::vector<std::array<int, 2>> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<std::array<int, 2>> next;
    for (const auto& v : frontier)
      for (const auto& a : assignment) {
        std::array<int, 2> u{(v[0] + a[0]) % n, (v[1] + a[1]) % n};
        std::size_t id = static_cast<std::size_t>(u[0]) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(u[1]);
        if (!hit[id]) {
          hit[id] = true;
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Cover build_finite_cover(const TwoComplex& base, const CoverSpec& spec) {
  if (spec.n < 1) raise(Errc::PreconditionViolated, "cover modulus must be >= 1");
  if (spec.assignment.size() != base.edges.size())
    raise(Errc::PreconditionViolated, "assignment size does not match edge count");
  for (const auto& f : base.faces) {
    auto s = spec.face_image(base, f);
    if (s[0] != 0 || s[1] != 0)
      raise(Errc::RelatorNotKilled, "a face image is non-zero in the deck group");
  }
  int n = spec.n;
  int sheets = n * n;
  auto deck_id = [n](int d0, int d1) { return d0 * n + d1; };

  Cover cover;
  TwoComplex& k = cover.complex;
  k.vertex_count = base.vertex_count * sheets;
  auto vertex_id = [&](int v, int d) { return v * sheets + d; };
  auto edge_id = [&](int e, int d) { return e * sheets + d; };  // 0-based

  k.edges.resize(base.edges.size() * static_cast<std::size_t>(sheets));
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    auto [tail, head] = base.edges[e];
    const auto& a = spec.assignment[e];
    for (int d0 = 0; d0 < n; ++d0)
      for (int d1 = 0; d1 < n; ++d1) {
        int d = deck_id(d0, d1);
        int dh = deck_id((d0 + a[0]) % n, (d1 + a[1]) % n);
        k.edges[static_cast<std::size_t>(edge_id(static_cast<int>(e), d))] = {
            vertex_id(tail, d), vertex_id(head, dh)};
      }
  }
  for (const auto& f : base.faces) {
    for (int d0 = 0; d0 < n; ++d0)
      for (int d1 = 0; d1 < n; ++d1) {
        TwoComplex::Face lift;
        lift.origin = f.origin;
        int p0 = d0, p1 = d1;
        for (int step : f.boundary) {
          int e = (step > 0 ? step : -step) - 1;
          const auto& a = spec.assignment[static_cast<std::size_t>(e)];
          if (step > 0) {
            lift.boundary.push_back(edge_id(e, deck_id(p0, p1)) + 1);
            p0 = (p0 + a[0]) % n;
            p1 = (p1 + a[1]) % n;
          } else {
            p0 = ((p0 - a[0]) % n + n) % n;
            p1 = ((p1 - a[1]) % n + n) % n;
            lift.boundary.push_back(-(edge_id(e, deck_id(p0, p1)) + 1));
          }
        }
        k.faces.push_back(std::move(lift));
      }
  }
  k.validate();

  // Connectivity of the 1-skeleton via union-find.
  std::vector<int> parent(static_cast<std::size_t>(k.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [tail, head] : k.edges) parent[static_cast<std::size_t>(find(tail))] = find(head);
  int root = k.vertex_count ? find(0) : 0;
  cover.connected = true;
  for (int v = 0; v < k.vertex_count; ++v)
    if (find(v) != root) cover.connected = false;
  return cover;
}

namespace {

/// Rank over F2 of a matrix given as rows of column-index lists.
class BitMatrixRank {
 public:
  BitMatrixRank(int cols) : words_((static_cast<std::size_t>(cols) + 63) / 64), cols_(cols) {}

  void add_row(const std::vector<int>& indices) {
    std::vector<std::uint64_t> row(words_, 0);
    for (int c : indices) row[static_cast<std::size_t>(c) / 64] ^= 1ULL << (c % 64);
    rows_.push_back(std::move(row));
  }

  int rank() {
    int r = 0;
    std::size_t nrows = rows_.size();
    for (int c = 0; c < cols_ && r < static_cast<int>(nrows); ++c) {
      std::size_t w = static_cast<std::size_t>(c) / 64;
      std::uint64_t bit = 1ULL << (c % 64);
      std::size_t pivot = nrows;
      for (std::size_t i = static_cast<std::size_t>(r); i < nrows; ++i)
        if (rows_[i][w] & bit) {
          pivot = i;
          break;
        }
      if (pivot == nrows) continue;
      std::swap(rows_[static_cast<std::size_t>(r)], rows_[pivot]);
      for (std::size_t i = 0; i < nrows; ++i) {
        if (static_cast<int>(i) != r && (rows_[i][w] & bit))
          for (std::size_t k = 0; k < words_; ++k) rows_[i][k] ^= rows_[static_cast<std::size_t>(r)][k];
      }
      ++r;
    }
    return r;
  }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
  std::size_t words_;
  int cols_;
};

}  // namespace

int f2_rank(const std::vector<std::vector<int>>& rows_of_indices, int cols) {
  BitMatrixRank m(cols);
  for (const auto& row : rows_of_indices) {
    // duplicate indices cancel mod 2 through xor in add_row
    m.add_row(row);
  }
  return m.rank();
}

F2Homology homology_f2(const TwoComplex& k) {
  // d1: edges -> vertices, edge e contributes head + tail (cancels for loops)
  std::vector<std::vector<int>> d1;
  d1.reserve(k.edges.size());
  for (const auto& [tail, head] : k.edges) {
    if (tail == head) d1.push_back({});
    else d1.push_back({tail, head});
  }
  // d2: faces -> edges, mod-2 multiplicity of each edge in the boundary word
  std::vector<std::vector<int>> d2;
  d2.reserve(k.faces.size());
  for (const auto& f : k.faces) {
    std::vector<int> idx;
    for (int step : f.boundary) idx.push_back((step > 0 ? step : -step) - 1);
    d2.push_back(std::move(idx));
  }
  int c0 = k.vertex_count;
  int c1 = static_cast<int>(k.edges.size());
  int c2 = static_cast<int>(k.faces.size());
  int r1 = f2_rank(d1, c0);
  int r2 = f2_rank(d2, c1);
  F2Homology h;
  h.h0 = c0 - r1;
  h.h1 = c1 - r1 - r2;
  h.h2 = c2 - r2;
  return h;
}

std::vector<GrowthRow> h1_growth_experiment(const Presentation& p,
                                            const std::vector<CoverSpec>& specs) {
  TwoComplex k = presentation_complex(p);
  TwoComplex l = k.without_faces(RelatorOrigin::FromW2Square);
  std::vector<GrowthRow> out;
  for (const CoverSpec& spec : specs) {
    GrowthRow row;
    row.n = spec.n;
    Cover ck = build_finite_cover(k, spec);
    Cover cl = build_finite_cover(l, spec);
    row.full = homology_f2(ck.complex);
    row.subcomplex = homology_f2(cl.complex);
    row.connected = ck.connected;
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<int>> hom_to_zn_generators(const Presentation& p, int n) {
  // Solve R v = 0 mod n with R the relator exponent matrix: with U R V = D,
  // v = V h where d_i h_i = 0 mod n; h_i ranges over multiples of n / gcd(d_i, n).
  IntMat r = exponent_matrix(p);
  std::size_t gens = static_cast<std::size_t>(p.generator_count);
  std::vector<std::vector<int>> out;
  if (r.empty()) {
    for (std::size_t i = 0; i < gens; ++i) {
      std::vector<int> v(gens, 0);
      v[i] = 1;
      out.push_back(v);
    }
    return out;
  }
  SmithForm snf = smith_normal_form(r);
  Int nn = n;
  for (std::size_t i = 0; i < gens; ++i) {
    Int d = i < snf.rank ? snf.diag[i] : Int(0);
    Int step = d == 0 ? Int(1) : nn / gcd(d, nn);
    if (step % nn == 0) continue;  // only the zero solution in this coordinate
    std::vector<int> v(gens, 0);
    for (std::size_t row = 0; row < gens; ++row) {
      Int val = (snf.V[row][i] * step) % nn;
      if (val < 0) val += nn;
      v[row] = val.convert_to<int>();
    }
    if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) out.push_back(v);
  }
  return out;
}

std::string export_edge_list(const TwoComplex& k) {
  std::ostringstream os;
  os << "v " << k.vertex_count << "\n";
  for (const auto& [tail, head] : k.edges) os << "e " << tail << " " << head << "\n";
  for (const auto& f : k.faces) {
    os << "f";
    for (int step : f.boundary) os << " " << step;
    os << "\n";
  }
  return os.str();
}

}  // namespace tracelab
