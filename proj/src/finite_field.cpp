#include "weylcells/finite_field.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace weylcells {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const PrimeField& prime_field(int p) {
  static const auto table = [] {
    std::array<std::unique_ptr<PrimeField>, PrimeField::kMaxPrime + 1> t;
    for (int q = 2; q <= PrimeField::kMaxPrime; ++q)
      if (is_prime(q)) t[static_cast<std::size_t>(q)] = std::make_unique<PrimeField>(q);
    return t;
  }();
  if (p < 0 || p > PrimeField::kMaxPrime || !table[static_cast<std::size_t>(p)]) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime <= " + std::to_string(PrimeField::kMaxPrime));
  }
  return *table[static_cast<std::size_t>(p)];
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime <= " + std::to_string(kMaxPrime));
  }
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inverse_[static_cast<std::size_t>(a)] = b;
  for (int g = 1; g < p; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = x * g % p) ++order;
    if (order == p - 1) {
      primitive_root_ = g;
      break;
    }
  }
}

int PrimeField::inv(int a) const {
  a = normalize(a);
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  return inverse_[static_cast<std::size_t>(a)];
}

int PrimeField::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int b = normalize(a);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

MatrixFq::MatrixFq(int n, int p) : n_(static_cast<std::uint8_t>(n)), p_(static_cast<std::uint8_t>(p)) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("matrix dimension must be in [1, 6]");
  if (!is_prime(p) || p > PrimeField::kMaxPrime) throw std::invalid_argument("matrix entries need a prime <= 31");
}

MatrixFq MatrixFq::identity(int n, int p) {
  MatrixFq m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  MatrixFq m(n, p);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

void MatrixFq::set(int i, int j, int v) {
  v %= p_;
  if (v < 0) v += p_;
  data_[static_cast<std::size_t>(i * kMaxDim + j)] = static_cast<std::uint8_t>(v);
}

int MatrixFq::det() const {
  // Gaussian elimination on a copy.
  const int p = p_;
  int a[kMaxDim][kMaxDim];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = at(i, j);
  const PrimeField& f = prime_field(p);
  int d = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(a[piv][j], a[c][j]);
      d = f.neg(d);
    }
    d = f.mul(d, a[c][c]);
    const int iv = f.inv(a[c][c]);
    for (int r = c + 1; r < n_; ++r) {
      if (a[r][c] == 0) continue;
      const int factor = f.mul(a[r][c], iv);
      for (int j = c; j < n_; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
    }
  }
  return d;
}

MatrixFq MatrixFq::inverse() const {
  const PrimeField& f = prime_field(p_);
  MatrixFq a = *this;
  MatrixFq inv = identity(n_, p_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    if (piv != c) {
      for (int j = 0; j < n_; ++j) {
        const int t = a.at(c, j);
        a.set(c, j, a.at(piv, j));
        a.set(piv, j, t);
        const int s = inv.at(c, j);
        inv.set(c, j, inv.at(piv, j));
        inv.set(piv, j, s);
      }
    }
    const int iv = f.inv(a.at(c, c));
    for (int j = 0; j < n_; ++j) {
      a.set(c, j, f.mul(a.at(c, j), iv));
      inv.set(c, j, f.mul(inv.at(c, j), iv));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      const int factor = f.neg(a.at(r, c));
      a.add_row_multiple(r, c, factor);
      inv.add_row_multiple(r, c, factor);
    }
  }
  return inv;
}

void MatrixFq::add_row_multiple(int target, int source, int c) {
  for (int j = 0; j < n_; ++j) set(target, j, at(target, j) + c * at(source, j));
}

void MatrixFq::add_col_multiple(int target, int source, int c) {
  for (int i = 0; i < n_; ++i) set(i, target, at(i, target) + c * at(i, source));
}

bool MatrixFq::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t MatrixFq::hash() const {
  // FNV-1a over the header and the used entries.
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  };
  mix(n_);
  mix(p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) mix(static_cast<std::uint8_t>(at(i, j)));
  return h;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("matrix shape or field mismatch");
  MatrixFq out(a.n_, a.p_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      int s = 0;
      for (int k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
      out.set(i, j, s);
    }
  return out;
}

std::uint64_t gl_order(int n, int q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return order;
}

std::uint64_t sl_order(int n, int q) { return gl_order(n, q) / static_cast<std::uint64_t>(q - 1); }

std::uint64_t sl_borel_order(int n, int q) {
  std::uint64_t order = 1;
  for (int i = 0; i < n - 1; ++i) order *= static_cast<std::uint64_t>(q - 1);
  for (int i = 0; i < n * (n - 1) / 2; ++i) order *= static_cast<std::uint64_t>(q);
  return order;
}

void for_each_sl(int n, int p, const std::function<void(const MatrixFq&)>& visit) {
  MatrixFq m(n, p);
  const int cells = n * n;
  std::vector<int> digits(static_cast<std::size_t>(cells), 0);
  while (true) {
    if (m.det() == 1) visit(m);
    int k = cells - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == p - 1) {
      digits[static_cast<std::size_t>(k)] = 0;
      m.set(k / n, k % n, 0);
      --k;
    }
    if (k < 0) return;
    ++digits[static_cast<std::size_t>(k)];
    m.set(k / n, k % n, digits[static_cast<std::size_t>(k)]);
  }
}

}  // namespace weylcells
