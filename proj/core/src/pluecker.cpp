#include "hgc/pluecker.hpp"

#include <stdexcept>

#include "hgc/counting.hpp"

namespace hgc {

PlueckerPoint pluecker(const Field& f, const Vec& v, const Vec& w) {
  const int m = v.size();
  if (w.size() != m) throw std::invalid_argument("pluecker: length mismatch");
  PlueckerPoint p;
  p.coords.resize(pair_count(m));
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) p.coords[k++] = f.sub(f.mul(v[i], w[j]), f.mul(v[j], w[i]));
  Elem lead = 0;
  for (Elem x : p.coords)
    if (x) {
      lead = x;
      break;
    }
  if (!lead) throw std::invalid_argument("pluecker: basis vectors are dependent");
  const Elem s = f.inv(lead);
  for (auto& x : p.coords) x = f.mul(s, x);
  return p;
}

bool satisfies_pluecker_relations(const Field& f, int m, std::span<const Elem> c) {
  if (static_cast<int>(c.size()) != pair_count(m)) throw std::invalid_argument("pluecker relations: length mismatch");
  auto at = [&](int i, int j) { return c[pair_index(m, i, j)]; };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          const Elem t1 = f.mul(at(i, j), at(k, l));
          const Elem t2 = f.mul(at(i, k), at(j, l));
          const Elem t3 = f.mul(at(i, l), at(j, k));
          if (f.add(f.sub(t1, t2), t3) != 0) return false;
        }
  return true;
}

ProjectiveSystem::ProjectiveSystem(HermitianSpace space, std::vector<ProjectivePoint> points,
                                   std::vector<IsotropicLine> lines)
    : space_(std::move(space)), points_(std::move(points)), lines_(std::move(lines)), k_(pair_count(space_.m())) {
  omega_.resize(lines_.size() * static_cast<std::size_t>(k_));
  const Field& f = space_.field();
  for (std::size_t j = 0; j < lines_.size(); ++j) {
    const auto p = pluecker(f, lines_[j]);
    std::copy(p.coords.begin(), p.coords.end(), omega_.begin() + j * k_);
  }
}

Matrix ProjectiveSystem::generator_matrix() const {
  Matrix g(k_, static_cast<int>(n()));
  for (std::size_t j = 0; j < n(); ++j) {
    const auto c = column(j);
    for (int r = 0; r < k_; ++r) g(r, static_cast<int>(j)) = c[r];
  }
  return g;
}

int ProjectiveSystem::generator_rank() const {
  EchelonBuilder eb(field(), k_);
  for (std::size_t j = 0; j < n() && eb.rank() < k_; ++j) eb.insert(column(j));
  return eb.rank();
}

ProjectiveSystem build_system(const HermitianSpace& s, std::uint64_t max_lines) {
  if (s.m() < 4) throw std::invalid_argument("build_system: m must be at least 4");
  const BigInt expected = line_count(s.m(), s.field().q());
  if (expected > BigInt(max_lines))
    throw std::length_error("build_system: " + to_string(expected) + " lines exceed the budget of " +
                            std::to_string(max_lines));
  auto pts = enumerate_points(s);
  auto lines = enumerate_lines(s, pts);
  return ProjectiveSystem(s, std::move(pts), std::move(lines));
}

}  // namespace hgc
