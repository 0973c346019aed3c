#include "hgc/field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hgc {

namespace {

// Conway polynomials for GF(p^n), n = 2e, constant term first.  All of them
// are primitive; make() re-checks this while building the log tables.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::vector<int> digits(int x, int p, int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be positive");
  const int n = 2 * e;
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= p;
    if (size > 256) throw std::invalid_argument("GF(q^2) exceeds the table-driven range (q^2 <= 256)");
  }
  auto it = conway_table().find({p, n});
  if (it == conway_table().end())
    throw std::invalid_argument("no defining polynomial for GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q2 = static_cast<int>(size);
  t->q = 1;
  for (int i = 0; i < e; ++i) t->q *= p;
  t->modulus = it->second;
  const int q2 = t->q2;

  t->add.resize(q2 * q2);
  t->sub.resize(q2 * q2);
  t->neg.resize(q2);
  for (int a = 0; a < q2; ++a) {
    auto da = digits(a, p, n);
    std::vector<int> dn(n);
    for (int k = 0; k < n; ++k) dn[k] = (p - da[k]) % p;
    t->neg[a] = static_cast<Elem>(undigits(dn, p));
    for (int b = 0; b < q2; ++b) {
      auto db = digits(b, p, n);
      std::vector<int> s(n), d(n);
      for (int k = 0; k < n; ++k) {
        s[k] = (da[k] + db[k]) % p;
        d[k] = (da[k] - db[k] + p) % p;
      }
      t->add[a * q2 + b] = static_cast<Elem>(undigits(s, p));
      t->sub[a * q2 + b] = static_cast<Elem>(undigits(d, p));
    }
  }

  // Powers of x modulo the defining polynomial.
  std::vector<int> antilog(q2 - 1);
  std::vector<int> log(q2, -1);
  std::vector<int> cur(n, 0);
  cur[0] = 1;
  for (int k = 0; k < q2 - 1; ++k) {
    int v = undigits(cur, p);
    if (log[v] != -1) throw std::logic_error("defining polynomial is not primitive");
    log[v] = k;
    antilog[k] = v;
    // cur *= x
    int top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - top * t->modulus[i]) % p + p) % p;
  }
  t->generator = static_cast<Elem>(antilog[1 % (q2 - 1)]);

  t->mul.assign(q2 * q2, 0);
  t->inv.assign(q2, 0);
  t->frob.assign(q2, 0);
  t->norm.assign(q2, 0);
  const int order = q2 - 1;
  for (int a = 1; a < q2; ++a) {
    for (int b = 1; b < q2; ++b) t->mul[a * q2 + b] = static_cast<Elem>(antilog[(log[a] + log[b]) % order]);
    t->inv[a] = static_cast<Elem>(antilog[(order - log[a]) % order]);
    t->frob[a] = static_cast<Elem>(antilog[(static_cast<long long>(log[a]) * t->q) % order]);
    t->norm[a] = static_cast<Elem>(antilog[(static_cast<long long>(log[a]) * (t->q + 1)) % order]);
  }
  return Field(std::move(t));
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  Elem b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  const auto& f = t_->modulus;
  bool first = true;
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
    if (f[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || f[k] != 1) os << f[k];
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace hgc
