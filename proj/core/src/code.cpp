#include "hgc/code.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "hgc/counting.hpp"

namespace hgc {

AlternatingForm::AlternatingForm(Field f, Matrix s) : f_(std::move(f)), s_(std::move(s)) {
  const int m = s_.rows();
  if (s_.cols() != m) throw std::invalid_argument("AlternatingForm: matrix must be square");
  for (int i = 0; i < m; ++i) {
    if (s_(i, i) != 0) throw std::invalid_argument("AlternatingForm: nonzero diagonal entry");
    for (int j = i + 1; j < m; ++j)
      if (s_(j, i) != f_.neg(s_(i, j))) throw std::invalid_argument("AlternatingForm: matrix is not antisymmetric");
  }
  radical_ = kernel(f_, s_);
  rank_ = m - radical_.dim();
}

AlternatingForm AlternatingForm::from_upper(Field f, int m, std::span<const Elem> upper) {
  if (static_cast<int>(upper.size()) != pair_count(m)) throw std::invalid_argument("from_upper: expected C(m,2) entries");
  Matrix s(m, m);
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Elem x = upper[k++];
      if (x >= f.q2()) throw std::invalid_argument("from_upper: entry outside the field");
      s(i, j) = x;
      s(j, i) = f.neg(x);
    }
  return AlternatingForm(std::move(f), std::move(s));
}

AlternatingForm AlternatingForm::rank2(Field f, const Vec& a, const Vec& b) {
  const int m = a.size();
  if (b.size() != m) throw std::invalid_argument("rank2: length mismatch");
  Matrix s(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s(i, j) = f.sub(f.mul(a[i], b[j]), f.mul(b[i], a[j]));
  return AlternatingForm(std::move(f), std::move(s));
}

std::vector<Elem> AlternatingForm::upper() const {
  std::vector<Elem> u;
  u.reserve(pair_count(m()));
  for (int i = 0; i < m(); ++i)
    for (int j = i + 1; j < m(); ++j) u.push_back(s_(i, j));
  return u;
}

Elem AlternatingForm::operator()(const Vec& x, const Vec& y) const {
  if (x.size() != m() || y.size() != m()) throw std::invalid_argument("AlternatingForm: length mismatch");
  Elem acc = 0;
  for (int i = 0; i < m(); ++i) {
    if (!x[i]) continue;
    Elem row = 0;
    for (int j = 0; j < m(); ++j) row = f_.add(row, f_.mul(s_(i, j), y[j]));
    acc = f_.add(acc, f_.mul(x[i], row));
  }
  return acc;
}

AlternatingForm AlternatingForm::scaled(Elem a) const {
  Matrix s(m(), m());
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < m(); ++j) s(i, j) = f_.mul(a, s_(i, j));
  return AlternatingForm(f_, std::move(s));
}

AlternatingForm AlternatingForm::plus(const AlternatingForm& o) const {
  if (o.m() != m()) throw std::invalid_argument("AlternatingForm: dimension mismatch");
  Matrix s(m(), m());
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < m(); ++j) s(i, j) = f_.add(s_(i, j), o.s_(i, j));
  return AlternatingForm(f_, std::move(s));
}

Elem evaluate(const AlternatingForm& phi, const IsotropicLine& line) { return phi(line.v, line.w); }

Elem evaluate_pluecker(const AlternatingForm& phi, std::span<const Elem> coords) {
  const int m = phi.m();
  if (static_cast<int>(coords.size()) != pair_count(m)) throw std::invalid_argument("evaluate_pluecker: length mismatch");
  const Field& f = phi.field();
  Elem acc = 0;
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) acc = f.add(acc, f.mul(phi.matrix()(i, j), coords[k++]));
  return acc;
}

Codeword codeword(const AlternatingForm& phi, const ProjectiveSystem& sys) {
  if (phi.m() != sys.m() || !(phi.field() == sys.field())) throw std::invalid_argument("codeword: form does not match system");
  Codeword c;
  c.values.resize(sys.n());
  for (std::size_t j = 0; j < sys.n(); ++j) {
    c.values[j] = evaluate_pluecker(phi, sys.column(j));
    if (c.values[j]) ++c.weight;
  }
  return c;
}

std::size_t weight_direct(const AlternatingForm& phi, const ProjectiveSystem& sys) { return codeword(phi, sys).weight; }

CaseValues case_values(int m, int q) {
  if (m < 4) throw std::invalid_argument("case_values: m must be at least 4");
  const std::uint64_t top = to_u64(ipow(q, 2 * m - 7));
  const std::uint64_t low = to_u64(ipow(q, m - 4));
  return {m % 2 == 0 ? top + low : top - low, top};
}

std::uint64_t wt_phi_u(const AlternatingForm& phi, const HermitianSpace& s, std::span<const ProjectivePoint> points,
                       const Vec& u) {
  const Field& f = s.field();
  if (u.is_zero()) throw std::invalid_argument("wt_phi_u: zero vector");
  if (!is_isotropic(s, u)) throw std::invalid_argument("wt_phi_u: vector is not isotropic");
  const auto pu = ProjectivePoint::of(f, u);
  std::uint64_t hits = 0;
  for (const auto& r : points) {
    if (r == pu) continue;
    if (eta(s, u, r.coords) != 0) continue;
    if (phi(u, r.coords) != 0) ++hits;
  }
  // Every line through [u] carries q² further points.
  const auto q2 = static_cast<std::uint64_t>(f.q2());
  if (hits % q2 != 0) throw std::logic_error("wt_phi_u: point count not divisible by q^2");
  return hits / q2;
}

std::uint64_t wt_phi_u(const AlternatingForm& phi, const PointStar& star, std::size_t idx, const Vec& u) {
  const Field& f = phi.field();
  const int m = phi.m();
  Vec row(m);
  for (int j = 0; j < m; ++j) {
    Elem acc = 0;
    for (int i = 0; i < m; ++i) acc = f.add(acc, f.mul(u[i], phi.matrix()(i, j)));
    row[j] = acc;
  }
  if (row.is_zero()) return 0;
  std::uint64_t n = 0;
  for (const Vec& r : star.through(idx)) {
    Elem acc = 0;
    for (int j = 0; j < m; ++j) acc = f.add(acc, f.mul(row[j], r[j]));
    if (acc) ++n;
  }
  return n;
}

RecursiveWeight weight_recursive(const AlternatingForm& phi, const ProjectiveSystem& sys, const PointStar& star) {
  const int q = sys.field().q();
  const auto points = sys.points();
  RecursiveWeight rw;
  rw.per_point.resize(points.size());
  std::uint64_t sum = 0;
  const std::uint64_t vectors_per_point = static_cast<std::uint64_t>(q) * q - 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    rw.per_point[i] = wt_phi_u(phi, star, i, points[i].coords);
    sum += vectors_per_point * rw.per_point[i];
  }
  const std::uint64_t den = static_cast<std::uint64_t>(q) * q * q * q - 1;
  if (sum % den != 0) throw std::logic_error("weight_recursive: sum not divisible by q^4-1");
  rw.weight = sum / den;
  return rw;
}

// ---------------------------------------------------------------------------

CodewordEngine::CodewordEngine(const ProjectiveSystem& sys, std::size_t max_table_bytes)
    : f_(sys.field()), n_(sys.n()), k_(sys.k()), stride_((sys.n() + 7) / 8 * 8), xor_add_(sys.field().p() == 2) {
  const std::size_t q2 = f_.q2();
  int len = 1;
  while (len < k_) {
    std::size_t rows = 1;
    for (int i = 0; i <= len; ++i) rows *= q2;
    const std::size_t groups = (k_ + len) / (len + 1);
    if (rows > 4096 || rows * stride_ * groups > max_table_bytes) break;
    ++len;
  }
  for (int start = 0; start < k_; start += len) {
    group_start_.push_back(start);
    group_len_.push_back(std::min(len, k_ - start));
  }
  for (std::size_t g = 0; g < group_len_.size(); ++g) {
    const int gl = group_len_[g];
    std::size_t rows = 1;
    for (int i = 0; i < gl; ++i) rows *= q2;
    std::vector<Elem> t(rows * stride_, 0);
    // Row r = row(r - d·q2^i) + d·ω_{start+i}, i the top nonzero digit of r.
    std::size_t place = 1;
    int digit_pos = 0;
    for (std::size_t r = 1; r < rows; ++r) {
      if (r == place * q2) {
        place *= q2;
        ++digit_pos;
      }
      const Elem d = static_cast<Elem>(r / place);
      const std::size_t base = r - d * place;
      const int coord = group_start_[g] + digit_pos;
      Elem* dst = t.data() + r * stride_;
      const Elem* src = t.data() + base * stride_;
      for (std::size_t j = 0; j < n_; ++j) dst[j] = f_.add(src[j], f_.mul(d, sys.column(j)[coord]));
    }
    tables_.push_back(std::move(t));
  }
}

void CodewordEngine::accumulate(Elem* acc, const Elem* row) const {
  if (xor_add_) {
    for (std::size_t j = 0; j < stride_; ++j) acc[j] ^= row[j];
    return;
  }
  const auto add = f_.add_table();
  const std::size_t q2 = f_.q2();
  for (std::size_t j = 0; j < n_; ++j) acc[j] = add[acc[j] * q2 + row[j]];
}

std::size_t CodewordEngine::count_nonzero(const Elem* v) const {
  std::size_t w = 0;
  for (std::size_t j = 0; j < n_; ++j) w += v[j] != 0;
  return w;
}

void CodewordEngine::codeword(std::span<const Elem> upper, std::vector<Elem>& out) const {
  if (static_cast<int>(upper.size()) != k_) throw std::invalid_argument("CodewordEngine: expected C(m,2) entries");
  out.assign(stride_, 0);
  const std::size_t q2 = f_.q2();
  for (std::size_t g = 0; g < group_len_.size(); ++g) {
    std::size_t idx = 0;
    for (int i = group_len_[g] - 1; i >= 0; --i) idx = idx * q2 + upper[group_start_[g] + i];
    accumulate(out.data(), row(static_cast<int>(g), idx));
  }
  out.resize(n_);
}

std::size_t CodewordEngine::weight(std::span<const Elem> upper) const {
  std::vector<Elem> c;
  codeword(upper, c);
  return count_nonzero(c.data());
}

std::vector<Elem> form_digits(std::uint64_t index, int k, int q2) {
  std::vector<Elem> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<Elem>(index % q2);
    index /= q2;
  }
  return d;
}

FormSampler::FormSampler(int k, int q2, std::uint64_t seed, bool nonzero)
    : k_(k), q2_(q2), nonzero_(nonzero), rng_(seed) {}

std::vector<Elem> FormSampler::next() {
  std::vector<Elem> u(k_);
  for (;;) {
    bool any = false;
    for (auto& x : u) {
      x = static_cast<Elem>(rng_() % static_cast<std::uint64_t>(q2_));
      any = any || x;
    }
    if (any || !nonzero_) return u;
  }
}

namespace {

struct Partial {
  std::vector<std::uint64_t> hist;
  std::uint64_t min_weight = 0;       // 0 = none yet
  std::vector<std::uint64_t> min_ids;  // scan index or sample index
  bool truncated = false;

  void record(std::size_t w, std::uint64_t id, std::size_t keep) {
    ++hist[w];
    if (w == 0) return;
    if (min_weight == 0 || w < min_weight) {
      min_weight = w;
      min_ids.clear();
    }
    if (w == min_weight && min_ids.size() < keep) min_ids.push_back(id);
  }
};

void merge(Partial& into, const Partial& p, std::size_t keep) {
  for (std::size_t w = 0; w < p.hist.size(); ++w) into.hist[w] += p.hist[w];
  if (p.min_weight == 0) return;
  if (into.min_weight == 0 || p.min_weight < into.min_weight) {
    into.min_weight = p.min_weight;
    into.min_ids.clear();
  }
  if (p.min_weight == into.min_weight)
    for (auto id : p.min_ids)
      if (into.min_ids.size() < keep) into.min_ids.push_back(id);
}

template <class Fn>
void run_parallel(int jobs, std::uint64_t n, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n < 2) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> ts;
  const std::uint64_t chunk = (n + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    const std::uint64_t lo = std::min<std::uint64_t>(n, t * chunk), hi = std::min<std::uint64_t>(n, lo + chunk);
    ts.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : ts) th.join();
}

}  // namespace

SpectrumReport spectrum(const ProjectiveSystem& sys, const SpectrumOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int k = sys.k();
  const int q2 = sys.field().q2();
  SpectrumReport rep;
  const int jobs = std::max(1, opt.jobs);
  const std::size_t keep = opt.keep_min_words;
  const std::size_t n = sys.n();

  if (opt.exhaustive) {
    BigInt total = ipow(q2, k);
    if (total > BigInt(opt.budget))
      throw std::length_error("spectrum: " + to_string(total) + " forms exceed the exhaustive budget of " +
                              std::to_string(opt.budget));
    const std::uint64_t forms = to_u64(total);
    const CodewordEngine eng(sys);
    const std::size_t inner = eng.rows(0);
    const std::uint64_t outer = forms / inner;
    std::vector<Partial> parts(jobs);
    for (auto& p : parts) p.hist.assign(n + 1, 0);

    run_parallel(jobs, outer, [&](int t, std::uint64_t lo, std::uint64_t hi) {
      Partial& part = parts[t];
      std::vector<Elem> acc(eng.stride());
      const Elem* add = sys.field().add_table().data();
      const bool xor_add = sys.field().p() == 2;
      for (std::uint64_t o = lo; o < hi; ++o) {
        std::fill(acc.begin(), acc.end(), 0);
        std::uint64_t rest = o;
        for (int g = 1; g < eng.groups(); ++g) {
          const std::size_t rows = eng.rows(g);
          eng.accumulate(acc.data(), eng.row(g, rest % rows));
          rest /= rows;
        }
        for (std::size_t r = 0; r < inner; ++r) {
          const Elem* row = eng.row(0, r);
          std::size_t w = 0;
          if (xor_add) {
            for (std::size_t j = 0; j < n; ++j) w += (acc[j] ^ row[j]) != 0;
          } else {
            for (std::size_t j = 0; j < n; ++j) w += add[acc[j] * q2 + row[j]] != 0;
          }
          part.record(w, o * inner + r, keep);
        }
      }
    });
    Partial all;
    all.hist.assign(n + 1, 0);
    for (const auto& p : parts) merge(all, p, keep);
    rep.mode = "exhaustive";
    rep.forms_scanned = forms;
    for (std::size_t w = 0; w <= n; ++w)
      if (all.hist[w]) rep.histogram[w] = all.hist[w];
    rep.min_nonzero_weight = all.min_weight;
    for (auto id : all.min_ids) rep.min_words.push_back(form_digits(id, k, q2));
    std::sort(rep.min_words.begin(), rep.min_words.end());
  } else {
    const CodewordEngine eng(sys);
    FormSampler sampler(k, q2, opt.seed, opt.nonzero_samples);
    Partial all;
    all.hist.assign(n + 1, 0);
    std::vector<std::vector<Elem>> kept;
    constexpr std::uint64_t kChunk = 1 << 14;
    for (std::uint64_t base = 0; base < opt.samples; base += kChunk) {
      const std::uint64_t cnt = std::min<std::uint64_t>(kChunk, opt.samples - base);
      std::vector<std::vector<Elem>> forms(cnt);
      for (auto& fm : forms) fm = sampler.next();
      std::vector<std::size_t> weights(cnt);
      run_parallel(jobs, cnt, [&](int, std::uint64_t lo, std::uint64_t hi) {
        std::vector<Elem> c;
        for (std::uint64_t i = lo; i < hi; ++i) {
          eng.codeword(forms[i], c);
          weights[i] = eng.count_nonzero(c.data());
        }
      });
      for (std::uint64_t i = 0; i < cnt; ++i) {
        const auto before = all.min_weight;
        all.record(weights[i], base + i, keep);
        if (keep == 0 || weights[i] == 0) continue;
        if (all.min_weight != before) kept.clear();
        if (weights[i] == all.min_weight && kept.size() < keep) kept.push_back(forms[i]);
      }
    }
    rep.mode = "sample";
    rep.seed = opt.seed;
    rep.forms_scanned = opt.samples;
    for (std::size_t w = 0; w <= n; ++w)
      if (all.hist[w]) rep.histogram[w] = all.hist[w];
    rep.min_nonzero_weight = all.min_weight;
    std::sort(kept.begin(), kept.end());
    rep.min_words = std::move(kept);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hgc
