#include "nfourier/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nfourier/error.hpp"

namespace nfourier {

namespace {

constexpr int kOrderBound = 10000;

// ---- arithmetic in F_p (p fits comfortably in long) ----

long addm(long a, long b, long p) { return (a + b) % p; }
long mulm(long a, long b, long p) { return (a * b) % p; }

long powm(long a, long e, long p) {
  long acc = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) acc = mulm(acc, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return acc;
}

long invm(long a, long p) { return powm(a % p, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p = 1 (mod e) with p > 2*sqrt(order), as pinned in the
// table construction contract
long dixon_prime(long e, long order) {
  long bound = 2 * static_cast<long>(std::sqrt(static_cast<double>(order))) + 1;
  long p = e + 1;
  if (p <= bound) p += e * ((bound - p) / e + 1);
  while (!is_prime(p)) p += e;
  return p;
}

long primitive_root(long p) {
  std::vector<long> qs;
  long m = p - 1;
  for (long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (long h = 2; h < p; ++h) {
    bool ok = true;
    for (long q : qs)
      if (powm(h, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return h;
  }
  require_internal(false, "no primitive root found");
  return 0;
}

using ModVec = std::vector<long>;
using ModMat = std::vector<ModVec>;  // row major

ModVec mat_apply(const ModMat& m, const ModVec& v, long p) {
  ModVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    long acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) acc = addm(acc, mulm(m[i][j], v[j], p), p);
    out[i] = acc;
  }
  return out;
}

// Columns of `basis` are independent and span a subspace containing w;
// returns coefficients c with sum_j c_j basis_j = w (Gauss-Jordan on the
// augmented system).
ModVec coords_in_basis(const std::vector<ModVec>& basis, const ModVec& w, long p) {
  const size_t r = w.size(), d = basis.size();
  std::vector<ModVec> aug(r, ModVec(d + 1));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
    aug[i][d] = w[i];
  }
  std::vector<size_t> pivot_row(d);
  size_t row = 0;
  for (size_t col = 0; col < d; ++col) {
    size_t pr = row;
    while (pr < r && aug[pr][col] == 0) ++pr;
    require_internal(pr < r, "basis columns must be independent");
    std::swap(aug[pr], aug[row]);
    long inv = invm(aug[row][col], p);
    for (size_t j = col; j <= d; ++j) aug[row][j] = mulm(aug[row][j], inv, p);
    for (size_t i = 0; i < r; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      long f = aug[i][col];
      for (size_t j = col; j <= d; ++j)
        aug[i][j] = addm(aug[i][j], p - mulm(f, aug[row][j], p), p);
    }
    pivot_row[col] = row;
    ++row;
  }
  for (size_t i = row; i < r; ++i)
    require_internal(aug[i][d] == 0, "vector not in claimed subspace");
  ModVec c(d);
  for (size_t col = 0; col < d; ++col) c[col] = aug[pivot_row[col]][d];
  return c;
}

// kernel basis of (m - lambda I) over F_p; m is d x d
std::vector<ModVec> eigen_kernel(ModMat m, long lambda, long p) {
  const size_t d = m.size();
  for (size_t i = 0; i < d; ++i) m[i][i] = addm(m[i][i], p - lambda % p, p);
  // row echelon
  std::vector<long> pivot_of_row;
  size_t row = 0;
  std::vector<char> is_pivot_col(d, 0);
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t pr = row;
    while (pr < d && m[pr][col] == 0) ++pr;
    if (pr == d) continue;
    std::swap(m[pr], m[row]);
    long inv = invm(m[row][col], p);
    for (size_t j = 0; j < d; ++j) m[row][j] = mulm(m[row][j], inv, p);
    for (size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      long f = m[i][col];
      for (size_t j = 0; j < d; ++j) m[i][j] = addm(m[i][j], p - mulm(f, m[row][j], p), p);
    }
    pivot_of_row.push_back(static_cast<long>(col));
    is_pivot_col[col] = 1;
    ++row;
  }
  std::vector<ModVec> kernel;
  for (size_t col = 0; col < d; ++col) {
    if (is_pivot_col[col]) continue;
    ModVec v(d, 0);
    v[col] = 1;
    for (size_t i = 0; i < pivot_of_row.size(); ++i)
      v[pivot_of_row[i]] = (p - m[i][col]) % p;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

long ClassFunction::degree() const {
  const Cyclotomic& v = values[group->class_of(group->identity())];
  auto q = v.as_rational();
  require_internal(q.has_value() && q->get_den() == 1, "degree must be a rational integer");
  return static_cast<long>(q->get_num().get_si());
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group.get() == o.group.get() && values == o.values;
}

CharacterTable::CharacterTable(GroupPtr g) : group_(std::move(g)) {
  const GroupPtr& G = group_;
  const long n = G->order();
  if (n > kOrderBound)
    fail("OrderLimitExceeded", "character table for order " + std::to_string(n) +
                                   " exceeds bound " + std::to_string(kOrderBound));
  const int r = G->class_count();
  const long e = G->exponent();
  const long p = dixon_prime(e, n);
  const long theta = powm(primitive_root(p), (p - 1) / e, p);

  // class multiplication coefficients a[i][j][k]:
  // #{(x,y) in C_i x C_j : x*y = rep_k}
  std::vector<std::vector<std::vector<long>>> a(
      r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (Element x : G->class_members(i))
      for (int k = 0; k < r; ++k) {
        Element y = G->mul(G->inv(x), G->class_rep(k));
        ++a[i][G->class_of(y)][k];
      }

  // class matrices acting on column vectors indexed by classes:
  // (N_i v)_j = sum_k a[i][j][k] v_k
  auto class_matrix = [&](int i) {
    ModMat m(r, ModVec(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m[j][k] = a[i][j][k] % p;
    return m;
  };

  // simultaneous eigenspace splitting
  std::vector<std::vector<ModVec>> spaces;  // each: list of basis columns
  {
    std::vector<ModVec> full;
    for (int i = 0; i < r; ++i) {
      ModVec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < r; ++i) {
    bool any_big = false;
    for (const auto& s : spaces) any_big |= s.size() > 1;
    if (!any_big) break;
    ModMat ni = class_matrix(i);
    std::vector<std::vector<ModVec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      const size_t d = s.size();
      // restricted action: column t = coords of N_i * s[t]
      ModMat act(d, ModVec(d));
      for (size_t t = 0; t < d; ++t) {
        ModVec coords = coords_in_basis(s, mat_apply(ni, s[t], p), p);
        for (size_t u = 0; u < d; ++u) act[u][t] = coords[u];
      }
      size_t found = 0;
      for (long lambda = 0; lambda < p && found < d; ++lambda) {
        auto ker = eigen_kernel(act, lambda, p);
        if (ker.empty()) continue;
        found += ker.size();
        std::vector<ModVec> sub;
        for (const auto& kv : ker) {
          ModVec v(r, 0);
          for (size_t t = 0; t < d; ++t)
            if (kv[t])
              for (int j = 0; j < r; ++j) v[j] = addm(v[j], mulm(kv[t], s[t][j], p), p);
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
      require_internal(found == d, "class matrix must be diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  require_internal(static_cast<int>(spaces.size()) == r,
                   "splitting must yield one eigencharacter per class");

  // central character values omega_t(i) from each 1-dim common eigenvector
  std::vector<ModVec> omega(r, ModVec(r));
  for (int t = 0; t < r; ++t) {
    const ModVec& v = spaces[t][0];
    int j0 = 0;
    while (v[j0] == 0) ++j0;
    long vj_inv = invm(v[j0], p);
    for (int i = 0; i < r; ++i) {
      ModVec w = mat_apply(class_matrix(i), v, p);
      omega[t][i] = mulm(w[j0], vj_inv, p);
      // eigenvector consistency across all coordinates
      for (int j = 0; j < r; ++j)
        require_internal(w[j] == mulm(omega[t][i], v[j], p), "not a common eigenvector");
    }
  }

  // degrees: d_t^2 = |G| / sum_i omega_t(i) omega_t(i') / |C_i|
  std::vector<int> inv_class(r);
  for (int i = 0; i < r; ++i) inv_class[i] = G->class_of(G->inv(G->class_rep(i)));
  std::vector<long> degree(r);
  long isqrt = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while ((isqrt + 1) * (isqrt + 1) <= n) ++isqrt;
  for (int t = 0; t < r; ++t) {
    long s = 0;
    for (int i = 0; i < r; ++i)
      s = addm(s, mulm(mulm(omega[t][i], omega[t][inv_class[i]], p), invm(G->class_size(i), p), p),
               p);
    long d2 = mulm(n % p, invm(s, p), p);
    long d = 0;
    for (long c = 1; c <= isqrt; ++c)
      if (mulm(c, c, p) == d2) {
        d = c;
        break;
      }
    require_internal(d > 0, "degree recovery failed");
    degree[t] = d;
  }
  long degsum = 0;
  for (int t = 0; t < r; ++t) degsum += degree[t] * degree[t];
  require_internal(degsum == n, "sum of squared degrees must equal the group order");

  // character values mod p, then exact lift through eigenvalue multiplicities
  std::vector<std::vector<int>> power_class(r, std::vector<int>(e));
  for (int i = 0; i < r; ++i) {
    Element rep = G->class_rep(i);
    Element acc = G->identity();
    for (long s = 0; s < e; ++s) {
      power_class[i][s] = G->class_of(acc);
      acc = G->mul(acc, rep);
    }
  }
  auto chi_bar = [&](int t, int i) {
    return mulm(mulm(degree[t] % p, omega[t][i], p), invm(G->class_size(i), p), p);
  };
  const long e_inv = invm(e % p, p);
  const long theta_inv = invm(theta, p);
  std::vector<ClassFunction> chars;
  for (int t = 0; t < r; ++t) {
    ClassFunction chi{G, std::vector<Cyclotomic>(r)};
    for (int i = 0; i < r; ++i) {
      Cyclotomic value;
      long msum = 0;
      for (long j = 0; j < e; ++j) {
        long m = 0;
        for (long s = 0; s < e; ++s)
          m = addm(m, mulm(chi_bar(t, power_class[i][s]), powm(theta_inv, (j * s) % (p - 1), p), p),
                   p);
        m = mulm(m, e_inv, p);
        require_internal(m <= degree[t], "eigenvalue multiplicity exceeds the degree");
        msum += m;
        if (m != 0) value += Cyclotomic(m) * Cyclotomic::root_of_unity(e, j);
      }
      require_internal(msum == degree[t], "eigenvalue multiplicities must sum to the degree");
      chi.values[i] = std::move(value);
    }
    require_internal(chi.degree() == degree[t], "lifted degree mismatch");
    require_internal(n % degree[t] == 0, "degree must divide the group order");
    chars.push_back(std::move(chi));
  }

  // exact verification: row and column orthogonality
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      Cyclotomic ip = inner_product(chars[s], chars[t]);
      require_internal(ip == Cyclotomic(s == t ? 1 : 0), "row orthogonality failed");
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclotomic acc;
      for (int t = 0; t < r; ++t) acc += chars[t].values[i] * chars[t].values[j].conj();
      Cyclotomic expected = (i == j) ? Cyclotomic(Rational(n, G->class_size(i))) : Cyclotomic(0);
      require_internal(acc == expected, "column orthogonality failed");
    }

  std::sort(chars.begin(), chars.end(), [](const ClassFunction& x, const ClassFunction& y) {
    long dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    for (size_t i = 0; i < x.values.size(); ++i) {
      int c = Cyclotomic::compare(x.values[i], y.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  irreps_ = std::move(chars);
}

CharacterTable character_table(const GroupPtr& g) { return CharacterTable(g); }

int CharacterTable::index_of(const ClassFunction& chi) const {
  for (int i = 0; i < size(); ++i)
    if (irreps_[i].values == chi.values) return i;
  return -1;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group.get() != g.group.get())
    fail("GroupMismatch", "inner product needs class functions on the same group");
  const GroupPtr& G = f.group;
  Cyclotomic acc;
  for (int c = 0; c < G->class_count(); ++c) {
    Cyclotomic term = f.values[c] * g.values[c].conj();
    term *= Rational(G->class_size(c));
    acc += term;
  }
  acc *= Rational(1, G->order());
  return acc;
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group.get() != h.parent().get())
    fail("NotASubgroup", "restriction target is not a subgroup of the character's group");
  const GroupPtr& H = h.group();
  ClassFunction out{H, std::vector<Cyclotomic>(H->class_count())};
  for (int c = 0; c < H->class_count(); ++c)
    out.values[c] = chi.at_element(h.to_parent(H->class_rep(c)));
  return out;
}

bool is_irreducible(const ClassFunction& f) {
  return inner_product(f, f) == Cyclotomic(1);
}

ClassFunction tensor_linear(const ClassFunction& chi, const ClassFunction& lambda) {
  if (chi.group.get() != lambda.group.get())
    fail("GroupMismatch", "tensor needs class functions on the same group");
  if (lambda.degree() != 1) fail("NotLinear", "twisting character must have degree 1");
  ClassFunction out{chi.group, chi.values};
  for (size_t c = 0; c < out.values.size(); ++c) out.values[c] *= lambda.values[c];
  return out;
}

std::vector<ClassFunction> epsilon_family(const GroupPtr& g, const GroupMap& zeta) {
  if (zeta.source.get() != g.get()) fail("NotSurjective", "grading map is not defined on this group");
  const int c = zeta.target->order();
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (zeta.target->mul(i, j) != (i + j) % c)
        fail("NotSurjective", "grading target must be the cyclic group with residue indexing");
  if (!zeta.is_surjective()) fail("NotSurjective", "grading map must be onto Z/c");
  std::vector<ClassFunction> family;
  for (int k = 0; k < c; ++k) {
    ClassFunction eps{g, std::vector<Cyclotomic>(g->class_count())};
    for (int cls = 0; cls < g->class_count(); ++cls)
      eps.values[cls] = Cyclotomic::root_of_unity(c, static_cast<long>(k) * zeta(g->class_rep(cls)));
    family.push_back(std::move(eps));
  }
  return family;
}

std::vector<ClassFunction> extensions_of(const ClassFunction& sigma, const Subgroup& h_in_z) {
  if (sigma.group.get() != h_in_z.group().get())
    fail("NotEmbedded", "sigma must live on the induced group of the given subgroup");
  CharacterTable table(h_in_z.parent());
  std::vector<ClassFunction> out;
  for (const ClassFunction& chi : table.irreducibles())
    if (restrict_to(chi, h_in_z).values == sigma.values) out.push_back(chi);
  return out;
}

}  // namespace nfourier
