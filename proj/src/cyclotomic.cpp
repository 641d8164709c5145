#include "nfourier/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "nfourier/error.hpp"

namespace nfourier {

namespace {

// Documented overflow policy: mixed-conductor operations lift to the lcm of
// conductors and refuse to go above this bound.
constexpr long kConductorPolicyBound = 1000000;
// Bound for the dense monomial table kept per conductor. Conductors between
// the two bounds are rejected as well; nothing in the supported corpus comes
// close to either.
constexpr long kDenseTableBound = 2048;

using Poly = std::vector<Rational>;  // coefficient vector, index = exponent

long poly_degree(const Poly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Integer-coefficient cyclotomic polynomials Phi_n, computed by exact
// division of x^n - 1 by all Phi_d with d | n, d < n.
const std::vector<mpz_class>& cyclo_poly(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);

  std::function<const std::vector<mpz_class>&(long)> get = [&](long m) -> const std::vector<mpz_class>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const std::vector<mpz_class>& phi_d = get(d);
      // exact division by a monic divisor
      long nd = static_cast<long>(num.size()) - 1;
      long dd = static_cast<long>(phi_d.size()) - 1;
      std::vector<mpz_class> quot(nd - dd + 1);
      for (long k = nd - dd; k >= 0; --k) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        for (long j = 0; j <= dd; ++j) num[k + j] -= c * phi_d[j];
      }
      for (const mpz_class& z : num) require_internal(z == 0, "cyclotomic division must be exact");
      num = std::move(quot);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

struct Demotion {
  long target;                              // n / p for a prime p | n
  long target_phi;
  std::vector<std::vector<Rational>> rref;  // RREF of the target power-basis rows
  std::vector<long> pivot;                  // pivot column per RREF row
  std::vector<std::vector<Rational>> trans; // rref = trans * original rows
};

struct ConductorContext {
  long n = 1;
  long phi = 1;
  std::vector<Rational> cyclo;                 // Phi_n as rationals, monic
  std::vector<std::vector<Rational>> power;    // x^e mod Phi_n, e in [0, max(n, 2*phi-1))
  std::vector<Demotion> demotions;             // one per prime divisor, ascending
};

// Reduces a polynomial (any degree) modulo Phi_n using the precomputed
// monomial rows; result has size phi.
std::vector<Rational> reduce_with(const ConductorContext& ctx, const Poly& p) {
  std::vector<Rational> out(ctx.phi);
  for (long e = 0; e < static_cast<long>(p.size()); ++e) {
    if (p[e] == 0) continue;
    if (e < ctx.phi) {
      out[e] += p[e];
    } else {
      require_internal(e < static_cast<long>(ctx.power.size()), "monomial row missing");
      const auto& row = ctx.power[e];
      for (long j = 0; j < ctx.phi; ++j)
        if (row[j] != 0) out[j] += p[e] * row[j];
    }
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

std::unique_ptr<ConductorContext> build_context(long n) {
  auto ctx = std::make_unique<ConductorContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  const auto& zpoly = cyclo_poly(n);
  ctx->cyclo.assign(zpoly.begin(), zpoly.end());

  // Monomial rows by incremental shift-and-reduce.
  long rows = std::max(n, 2 * ctx->phi - 1);
  ctx->power.resize(rows);
  std::vector<Rational> cur(ctx->phi);
  cur[0] = 1;
  ctx->power[0] = cur;
  for (long e = 1; e < rows; ++e) {
    // multiply by x
    Rational top = cur[ctx->phi - 1];
    for (long j = ctx->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      // x^phi = -sum_{j<phi} cyclo[j] x^j   (cyclo monic)
      for (long j = 0; j < ctx->phi; ++j) {
        if (ctx->cyclo[j] != 0) cur[j] -= top * ctx->cyclo[j];
        cur[j].canonicalize();
      }
    }
    ctx->power[e] = cur;
  }

  // Demotion solvers, one per prime divisor.
  long m = n;
  std::vector<long> primes;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  for (long p : primes) {
    Demotion d;
    d.target = n / p;
    d.target_phi = euler_phi(d.target);
    long step = n / d.target;
    std::vector<std::vector<Rational>> basis(d.target_phi);
    for (long j = 0; j < d.target_phi; ++j) basis[j] = ctx->power[j * step];
    // Gauss-Jordan with a recorded transform: rref = trans * basis.
    d.rref = basis;
    d.trans.assign(d.target_phi, std::vector<Rational>(d.target_phi));
    for (long i = 0; i < d.target_phi; ++i) d.trans[i][i] = 1;
    long row = 0;
    for (long col = 0; col < ctx->phi && row < d.target_phi; ++col) {
      long pr = -1;
      for (long r = row; r < d.target_phi; ++r)
        if (d.rref[r][col] != 0) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(d.rref[pr], d.rref[row]);
      std::swap(d.trans[pr], d.trans[row]);
      Rational inv = 1 / d.rref[row][col];
      for (auto& v : d.rref[row]) { v *= inv; v.canonicalize(); }
      for (auto& v : d.trans[row]) { v *= inv; v.canonicalize(); }
      for (long r = 0; r < d.target_phi; ++r) {
        if (r == row || d.rref[r][col] == 0) continue;
        Rational f = d.rref[r][col];
        for (long j = 0; j < ctx->phi; ++j) {
          d.rref[r][j] -= f * d.rref[row][j];
          d.rref[r][j].canonicalize();
        }
        for (long j = 0; j < d.target_phi; ++j) {
          d.trans[r][j] -= f * d.trans[row][j];
          d.trans[r][j].canonicalize();
        }
      }
      d.pivot.push_back(col);
      ++row;
    }
    require_internal(row == d.target_phi, "subfield power basis must have full rank");
    ctx->demotions.push_back(std::move(d));
  }
  return ctx;
}

const ConductorContext& context(long n) {
  if (n > kConductorPolicyBound)
    fail("ConductorOverflow", "conductor " + std::to_string(n) + " exceeds policy bound " +
                                  std::to_string(kConductorPolicyBound));
  if (n > kDenseTableBound)
    fail("ConductorOverflow", "conductor " + std::to_string(n) + " exceeds dense table bound " +
                                  std::to_string(kDenseTableBound));
  static std::shared_mutex mu;
  static std::map<long, std::unique_ptr<ConductorContext>> reg;
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    auto it = reg.find(n);
    if (it != reg.end()) return *it->second;
  }
  std::unique_lock<std::shared_mutex> lock(mu);
  auto it = reg.find(n);
  if (it == reg.end()) it = reg.emplace(n, build_context(n)).first;
  return *it->second;
}

// Attempts to rewrite coeffs (length phi(n)) in the conductor-d.target basis.
std::optional<std::vector<Rational>> try_demote(const ConductorContext& ctx, const Demotion& d,
                                                const std::vector<Rational>& v) {
  std::vector<Rational> residual = v;
  std::vector<Rational> coords(d.target_phi);
  for (long i = 0; i < d.target_phi; ++i) {
    Rational c = residual[d.pivot[i]];
    coords[i] = c;
    if (c == 0) continue;
    for (long j = 0; j < ctx.phi; ++j) {
      if (d.rref[i][j] == 0) continue;
      residual[j] -= c * d.rref[i][j];
      residual[j].canonicalize();
    }
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;
  std::vector<Rational> out(d.target_phi);
  for (long j = 0; j < d.target_phi; ++j) {
    for (long i = 0; i < d.target_phi; ++i)
      if (coords[i] != 0 && d.trans[i][j] != 0) out[j] += coords[i] * d.trans[i][j];
    out[j].canonicalize();
  }
  return out;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail("MalformedRational", "empty rational string");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      fail("MalformedRational", "bad character in rational: " + s);
  Rational q;
  if (q.set_str(s, 10) != 0) fail("MalformedRational", "unparsable rational: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void Cyclotomic::normalize() {
  while (conductor_ > 1) {
    const ConductorContext& ctx = context(conductor_);
    require_internal(static_cast<long>(coeffs_.size()) == ctx.phi, "coefficient size mismatch");
    bool demoted = false;
    for (const Demotion& d : ctx.demotions) {
      auto lower = try_demote(ctx, d, coeffs_);
      if (lower) {
        conductor_ = d.target;
        coeffs_ = std::move(*lower);
        demoted = true;
        break;
      }
    }
    if (!demoted) break;
  }
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) fail("MalformedTable", "root_of_unity needs N >= 1");
  k %= n;
  if (k < 0) k += n;
  if (n == 1) return Cyclotomic(1L);
  const ConductorContext& ctx = context(n);
  return Cyclotomic(n, ctx.power[k]);
}

Cyclotomic Cyclotomic::from_coeff_map(long conductor, const std::map<long, Rational>& coeffs) {
  if (conductor < 1) fail("MalformedRational", "conductor must be >= 1");
  long phi = euler_phi(conductor);
  std::vector<Rational> v(phi);
  for (const auto& [e, c] : coeffs) {
    if (e < 0 || e >= phi)
      fail("MalformedRational", "exponent " + std::to_string(e) + " out of basis range");
    v[e] = c;
  }
  return Cyclotomic(conductor, std::move(v));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;  // negation cannot change the minimal conductor
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  const ConductorContext& ctx = context(conductor_);
  std::vector<Rational> out(ctx.phi);
  for (long e = 0; e < ctx.phi; ++e) {
    if (coeffs_[e] == 0) continue;
    long me = (conductor_ - e) % conductor_;
    const auto& row = ctx.power[me];
    for (long j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += coeffs_[e] * row[j];
  }
  return Cyclotomic(conductor_, std::move(out));
}

namespace {
// Lifts coeffs from conductor n into the basis of conductor m (n | m).
std::vector<Rational> lift_coeffs(const std::vector<Rational>& coeffs, long n, long m) {
  const ConductorContext& ctx = context(m);
  long step = m / n;
  std::vector<Rational> out(ctx.phi);
  for (long e = 0; e < static_cast<long>(coeffs.size()); ++e) {
    if (coeffs[e] == 0) continue;
    const auto& row = ctx.power[e * step];
    for (long j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += coeffs[e] * row[j];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

long lcm_checked(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g * b;
  if (l > kConductorPolicyBound)
    fail("ConductorOverflow", "lcm of conductors " + std::to_string(a) + ", " + std::to_string(b) +
                                  " exceeds policy bound");
  return l;
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) {
    Rational s = a.coeffs_[0] + b.coeffs_[0];
    return Cyclotomic(s);
  }
  long m = lcm_checked(a.conductor_, b.conductor_);
  std::vector<Rational> av = (a.conductor_ == m) ? a.coeffs_ : lift_coeffs(a.coeffs_, a.conductor_, m);
  std::vector<Rational> bv = (b.conductor_ == m) ? b.coeffs_ : lift_coeffs(b.coeffs_, b.conductor_, m);
  for (size_t i = 0; i < av.size(); ++i) {
    av[i] += bv[i];
    av[i].canonicalize();
  }
  return Cyclotomic(m, std::move(av));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) {
    Rational s = a.coeffs_[0] * b.coeffs_[0];
    return Cyclotomic(s);
  }
  if (a.conductor_ == 1) {
    if (a.coeffs_[0] == 0) return Cyclotomic();
    Cyclotomic r = b;
    r *= a.coeffs_[0];
    return r;
  }
  if (b.conductor_ == 1) {
    if (b.coeffs_[0] == 0) return Cyclotomic();
    Cyclotomic r = a;
    r *= b.coeffs_[0];
    return r;
  }
  long m = lcm_checked(a.conductor_, b.conductor_);
  const ConductorContext& ctx = context(m);
  std::vector<Rational> av = (a.conductor_ == m) ? a.coeffs_ : lift_coeffs(a.coeffs_, a.conductor_, m);
  std::vector<Rational> bv = (b.conductor_ == m) ? b.coeffs_ : lift_coeffs(b.coeffs_, b.conductor_, m);
  std::vector<Rational> prod(2 * ctx.phi - 1);
  for (long i = 0; i < ctx.phi; ++i) {
    if (av[i] == 0) continue;
    for (long j = 0; j < ctx.phi; ++j) {
      if (bv[j] == 0) continue;
      prod[i + j] += av[i] * bv[j];
    }
  }
  return Cyclotomic(m, reduce_with(ctx, prod));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) { return *this = *this + o; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this = *this - o; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  if (s == 0) return *this = Cyclotomic();
  for (auto& c : coeffs_) {
    c *= s;
    c.canonicalize();
  }
  return *this;  // scaling by a nonzero rational preserves the minimal conductor
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
  const ConductorContext& ctx = context(conductor_);
  // Extended Euclid in Q[x] against Phi_N (irreducible over Q, so the gcd is
  // a nonzero constant and the Bezout coefficient of the value is the inverse).
  Poly r0 = ctx.cyclo;
  Poly r1 = coeffs_;
  Poly s0(1), s1{Rational(1)};
  while (poly_degree(r1) >= 0) {
    long d0 = poly_degree(r0), d1 = poly_degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // one division step r0 -= (lead0/lead1) x^{d0-d1} r1
    Rational f = r0[d0] / r1[d1];
    long shift = d0 - d1;
    if (static_cast<long>(s0.size()) < static_cast<long>(s1.size()) + shift)
      s0.resize(s1.size() + shift);
    for (long j = 0; j <= d1; ++j) {
      r0[j + shift] -= f * r1[j];
      r0[j + shift].canonicalize();
    }
    for (long j = 0; j < static_cast<long>(s1.size()); ++j) {
      s0[j + shift] -= f * s1[j];
      s0[j + shift].canonicalize();
    }
  }
  long dg = poly_degree(r0);
  require_internal(dg == 0, "gcd with the cyclotomic polynomial must be constant");
  Rational c = r0[0];
  for (auto& v : s0) {
    v /= c;
    v.canonicalize();
  }
  return Cyclotomic(conductor_, reduce_with(ctx, s0));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return false;
  return a.coeffs_ == b.coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::optional<std::pair<long, long>> Cyclotomic::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  static const Cyclotomic one(1L);
  if (*this * conj() != one) return std::nullopt;
  Cyclotomic acc = *this;
  long bound = 2 * conductor_;
  for (long m = 1; m <= bound; ++m) {
    if (acc == one) {
      for (long j = 0; j < m; ++j)
        if (root_of_unity(m, j) == *this) return std::make_pair(m, j);
      require_internal(false, "order located but exponent not found");
    }
    acc *= *this;
  }
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_float() const {
  std::complex<double> acc(0.0, 0.0);
  for (long e = 0; e < static_cast<long>(coeffs_.size()); ++e) {
    if (coeffs_[e] == 0) continue;
    double c = coeffs_[e].get_d();
    double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(conductor_);
    acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = 0; e < static_cast<long>(coeffs_.size()); ++e) {
    if (coeffs_[e] == 0) continue;
    Rational c = coeffs_[e];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0 && e > 0) {
      os << "-";
      c = -c;
    }
    if (e == 0) {
      os << (first && coeffs_[e] < 0 ? coeffs_[e].get_str() : c.get_str());
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << conductor_;
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace nfourier
