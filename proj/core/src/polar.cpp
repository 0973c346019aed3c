#include "hgc/polar.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgc/counting.hpp"

namespace hgc {

HermitianSpace::HermitianSpace(Field f, int m) : f_(std::move(f)), m_(m), gram_(Matrix::identity(m)) {
  if (m < 1 || m > kMaxDim) throw std::invalid_argument("HermitianSpace: dimension out of range");
}

HermitianSpace::HermitianSpace(Field f, Matrix gram) : f_(std::move(f)), m_(gram.rows()), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("HermitianSpace: Gram matrix must be square");
  if (m_ < 1 || m_ > kMaxDim) throw std::invalid_argument("HermitianSpace: dimension out of range");
  if (transpose(conj(f_, gram_)) != gram_) throw std::invalid_argument("HermitianSpace: Gram matrix is not Hermitian");
  if (rank(f_, gram_) != m_) throw std::invalid_argument("HermitianSpace: Gram matrix is singular");
  identity_ = gram_ == Matrix::identity(m_);
}

Elem eta(const HermitianSpace& s, const Vec& x, const Vec& y) {
  const int m = s.m();
  if (x.size() != m || y.size() != m) throw std::invalid_argument("eta: length mismatch");
  const Field& f = s.field();
  Elem acc = 0;
  if (s.identity_gram()) {
    for (int i = 0; i < m; ++i) acc = f.add(acc, f.mul(f.frob(x[i]), y[i]));
    return acc;
  }
  const Matrix& h = s.gram();
  for (int i = 0; i < m; ++i) {
    const Elem cx = f.frob(x[i]);
    if (!cx) continue;
    Elem row = 0;
    for (int j = 0; j < m; ++j) row = f.add(row, f.mul(h(i, j), y[j]));
    acc = f.add(acc, f.mul(cx, row));
  }
  return acc;
}

ProjectivePoint ProjectivePoint::of(const Field& f, const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("ProjectivePoint: zero vector");
  return {normalize(f, v)};
}

std::vector<ProjectivePoint> enumerate_points(const HermitianSpace& s) {
  const Field& f = s.field();
  const int m = s.m();
  const int q2 = f.q2();
  std::vector<ProjectivePoint> out;
  for (int lead = 0; lead < m; ++lead) {
    const int free = m - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= static_cast<std::uint64_t>(q2);
    Vec v(m);
    v[lead] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t x = n;
      for (int j = m - 1; j > lead; --j) {
        v[j] = static_cast<Elem>(x % q2);
        x /= q2;
      }
      if (is_isotropic(s, v)) out.push_back({v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsotropicLine> enumerate_lines(const HermitianSpace& s, std::span<const ProjectivePoint> points) {
  const Field& f = s.field();
  const int m = s.m();
  // η(p, r) = conj(p)ᵀ·H·r, so precompute the row vectors conj(p)ᵀ·H.
  std::vector<Vec> lhs;
  lhs.reserve(points.size());
  for (const auto& p : points) {
    Vec c = conj(f, p.coords);
    if (!s.identity_gram()) c = apply(f, transpose(s.gram()), c);
    lhs.push_back(c);
  }
  std::vector<int> lead(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) lead[i] = points[i].coords.lead();

  std::vector<IsotropicLine> out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    // p plays row 2 of the RREF basis, r plays row 1.
    const Vec& p = points[a].coords;
    const int lp = lead[a];
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (lead[b] >= lp) continue;
      const Vec& r = points[b].coords;
      if (r[lp] != 0) continue;
      Elem acc = 0;
      for (int i = 0; i < m; ++i) acc = f.add(acc, f.mul(lhs[a][i], r[i]));
      if (acc == 0) out.push_back({r, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsotropicLine> enumerate_lines(const HermitianSpace& s) {
  const auto pts = enumerate_points(s);
  return enumerate_lines(s, pts);
}

std::vector<ProjectivePoint> points_on(const Field& f, const IsotropicLine& l) {
  std::vector<ProjectivePoint> out;
  out.reserve(f.q2() + 1);
  out.push_back(ProjectivePoint::of(f, l.v));
  for (int a = 0; a < f.q2(); ++a)
    out.push_back(ProjectivePoint::of(f, add(f, l.w, scale(f, static_cast<Elem>(a), l.v))));
  return out;
}

Subspace perp(const HermitianSpace& s, const Subspace& w) {
  const Field& f = s.field();
  const int m = s.m();
  if (w.ambient() != m) throw std::invalid_argument("perp: ambient mismatch");
  if (w.dim() == 0) return Subspace::full(m);
  Matrix rows = conj(f, w.basis());
  if (!s.identity_gram()) rows = multiply(f, rows, s.gram());
  return kernel(f, rows);
}

std::string RadicalProfile::label() const {
  return "[Pi_" + std::to_string(t) + "]H_" + std::to_string(d - t);
}

RadicalProfile radical_profile(const HermitianSpace& s, const Subspace& r) {
  const Field& f = s.field();
  RadicalProfile prof;
  prof.d = r.dim();
  prof.vertex = intersect(f, r, perp(s, r));
  prof.t = prof.vertex.dim();
  for (int i = 0; i < prof.vertex.dim(); ++i)
    for (int j = 0; j < prof.vertex.dim(); ++j)
      if (eta(s, prof.vertex.vector(i), prof.vertex.vector(j)) != 0) prof.vertex_totally_isotropic = false;
  prof.formula_points = to_u64(cone_points(prof.d, prof.t, f.q()));

  // Direct count over PG(R) when small enough.
  const int d = prof.d;
  const int q2 = f.q2();
  double total = 1;
  for (int i = 0; i < d; ++i) total *= q2;
  if (total <= double(1 << 22)) {
    std::uint64_t count = 0;
    for (int lead = 0; lead < d; ++lead) {
      std::uint64_t n_tail = 1;
      for (int i = lead + 1; i < d; ++i) n_tail *= q2;
      std::vector<Elem> c(d, 0);
      c[lead] = 1;
      for (std::uint64_t n = 0; n < n_tail; ++n) {
        std::uint64_t x = n;
        for (int j = d - 1; j > lead; --j) {
          c[j] = static_cast<Elem>(x % q2);
          x /= q2;
        }
        Vec v(s.m());
        for (int i = 0; i < d; ++i)
          if (c[i]) v = add(f, v, scale(f, c[i], r.vector(i)));
        if (is_isotropic(s, v)) ++count;
      }
    }
    prof.counted_points = count;
  }
  return prof;
}

long find_point(std::span<const ProjectivePoint> points, const ProjectivePoint& p) {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return -1;
  return static_cast<long>(it - points.begin());
}

PointStar::PointStar(const HermitianSpace& s, std::span<const ProjectivePoint> points,
                     std::span<const IsotropicLine> lines) {
  const Field& f = s.field();
  std::vector<std::vector<Vec>> per(points.size());
  for (const auto& l : lines) {
    const auto on = points_on(f, l);
    for (std::size_t k = 0; k < on.size(); ++k) {
      const long idx = find_point(points, on[k]);
      if (idx < 0) throw std::logic_error("PointStar: line point missing from the point list");
      per[idx].push_back(k == 0 ? l.w : l.v);
    }
  }
  offsets_.assign(1, 0);
  for (auto& v : per) {
    reps_.insert(reps_.end(), v.begin(), v.end());
    offsets_.push_back(reps_.size());
  }
}

}  // namespace hgc
