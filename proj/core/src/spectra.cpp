// Copyright 2026 The nbspec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nbspec/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "nbspec/errors.hpp"

namespace nbspec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Balanced {
  int low = 0;
  int high = 0;
};

void swap_rows_cols(DenseMatrix& a, int j, int k, int low, int n, int high) {
  for (int i = 0; i <= high; ++i) std::swap(a(i, j), a(i, k));
  for (int i = low; i < n; ++i) std::swap(a(j, i), a(k, i));
}

// Permutes rows and columns so that eigenvalues isolated by zero patterns
// fall outside [low, high], then scales the remaining block by powers of two
// until row and column norms are comparable.
Balanced balance(DenseMatrix& a) {
  const int n = static_cast<int>(a.rows());
  constexpr double radix = 2.0;
  constexpr double radix2 = radix * radix;
  int low = 0;
  int high = n - 1;

  bool found = true;
  while (found && high > 0) {
    found = false;
    for (int j = high; j >= 0; --j) {
      bool isolated = true;
      for (int i = 0; i <= high && isolated; ++i) {
        if (i != j && a(j, i) != 0.0) isolated = false;
      }
      if (!isolated) continue;
      if (j != high) swap_rows_cols(a, j, high, low, n, high);
      --high;
      found = true;
      break;
    }
  }
  found = true;
  while (found && low < high) {
    found = false;
    for (int j = low; j <= high; ++j) {
      bool isolated = true;
      for (int i = low; i <= high && isolated; ++i) {
        if (i != j && a(i, j) != 0.0) isolated = false;
      }
      if (!isolated) continue;
      if (j != low) swap_rows_cols(a, j, low, low, n, high);
      ++low;
      found = true;
      break;
    }
  }

  bool noconv = true;
  while (noconv) {
    noconv = false;
    for (int i = low; i <= high; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (int j = low; j <= high; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix2;
      }
      g = r * radix;
      while (c >= g) {
        f /= radix;
        c /= radix2;
      }
      if ((c + r) / f < 0.95 * s) {
        g = 1.0 / f;
        noconv = true;
        for (int j = low; j < n; ++j) a(i, j) *= g;
        for (int j = 0; j <= high; ++j) a(j, i) *= f;
      }
    }
  }
  return {low, high};
}

void hessenberg(DenseMatrix& h, int low, int high) {
  const int n = static_cast<int>(h.rows());
  std::vector<double> ort(static_cast<std::size_t>(n), 0.0);
  for (int m = low + 1; m <= high - 1; ++m) {
    double scale = 0.0;
    for (int i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
    if (scale == 0.0) continue;
    double hh = 0.0;
    for (int i = high; i >= m; --i) {
      ort[i] = h(i, m - 1) / scale;
      hh += ort[i] * ort[i];
    }
    double g = std::sqrt(hh);
    if (ort[m] > 0) g = -g;
    hh -= ort[m] * g;
    ort[m] -= g;
    for (int j = m; j < n; ++j) {
      double f = 0.0;
      for (int i = high; i >= m; --i) f += ort[i] * h(i, j);
      f /= hh;
      for (int i = m; i <= high; ++i) h(i, j) -= f * ort[i];
    }
    for (int i = 0; i <= high; ++i) {
      double f = 0.0;
      for (int j = high; j >= m; --j) f += ort[j] * h(i, j);
      f /= hh;
      for (int j = m; j <= high; ++j) h(i, j) -= f * ort[j];
    }
    h(m, m - 1) = scale * g;
    for (int i = m + 1; i <= high; ++i) h(i, m - 1) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix whose rows and
// columns outside [low, high] are already triangular.
std::vector<Complex> hessenberg_qr(DenseMatrix& h, int low, int high) {
  const int nn = static_cast<int>(h.rows());
  std::vector<double> d(static_cast<std::size_t>(nn), 0.0);
  std::vector<double> e(static_cast<std::size_t>(nn), 0.0);
  double norm = 0.0;
  for (int i = 0; i < nn; ++i) {
    if (i < low || i > high) {
      d[i] = h(i, i);
      e[i] = 0.0;
    }
    for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(h(i, j));
  }

  const long budget = 40L * nn;
  long sweeps = 0;
  int n = high;
  double exshift = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, z = 0.0;
  double w = 0.0, x = 0.0, y = 0.0;
  int iter = 0;

  while (n >= low) {
    int l = n;
    while (l > low) {
      s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (s == 0.0) s = norm;
      if (std::abs(h(l, l - 1)) < kEps * s) break;
      --l;
    }

    if (l == n) {
      h(n, n) += exshift;
      d[n] = h(n, n);
      e[n] = 0.0;
      --n;
      iter = 0;
    } else if (l == n - 1) {
      w = h(n, n - 1) * h(n - 1, n);
      p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
      q = p * p + w;
      z = std::sqrt(std::abs(q));
      h(n, n) += exshift;
      h(n - 1, n - 1) += exshift;
      x = h(n, n);
      if (q >= 0) {
        z = p >= 0 ? p + z : p - z;
        d[n - 1] = x + z;
        d[n] = d[n - 1];
        if (z != 0.0) d[n] = x - w / z;
        e[n - 1] = 0.0;
        e[n] = 0.0;
      } else {
        d[n - 1] = x + p;
        d[n] = x + p;
        e[n - 1] = z;
        e[n] = -z;
      }
      n -= 2;
      iter = 0;
    } else {
      if (++sweeps > budget) {
        throw SolverError("QR iteration did not converge for a " +
                              std::to_string(nn) + "x" + std::to_string(nn) +
                              " matrix",
                          static_cast<std::size_t>(nn));
      }
      x = h(n, n);
      y = 0.0;
      w = 0.0;
      if (l < n) {
        y = h(n - 1, n - 1);
        w = h(n, n - 1) * h(n - 1, n);
      }
      if (iter == 10) {
        exshift += x;
        for (int i = low; i <= n; ++i) h(i, i) -= x;
        s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      if (iter == 30) {
        s = (y - x) / 2.0;
        s = s * s + w;
        if (s > 0) {
          s = std::sqrt(s);
          if (y < x) s = -s;
          s = x - w / ((y - x) / 2.0 + s);
          for (int i = low; i <= n; ++i) h(i, i) -= s;
          exshift += s;
          x = y = w = 0.964;
        }
      }
      ++iter;

      int m = n - 2;
      while (m >= l) {
        z = h(m, m);
        r = x - z;
        s = y - z;
        p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - z - r - s;
        r = h(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
            kEps * (std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                   std::abs(h(m + 1, m + 1))))) {
          break;
        }
        --m;
      }
      for (int i = m + 2; i <= n; ++i) {
        h(i, i - 2) = 0.0;
        if (i > m + 2) h(i, i - 3) = 0.0;
      }

      for (int k = m; k <= n - 1; ++k) {
        const bool notlast = k != n - 1;
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = notlast ? h(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        s = std::sqrt(p * p + q * q + r * r);
        if (p < 0) s = -s;
        if (s == 0.0) continue;
        if (k != m) {
          h(k, k - 1) = -s * x;
        } else if (l != m) {
          h(k, k - 1) = -h(k, k - 1);
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j < nn; ++j) {
          p = h(k, j) + q * h(k + 1, j);
          if (notlast) {
            p += r * h(k + 2, j);
            h(k + 2, j) -= p * z;
          }
          h(k, j) -= p * x;
          h(k + 1, j) -= p * y;
        }
        for (int i = 0; i <= std::min(n, k + 3); ++i) {
          p = x * h(i, k) + y * h(i, k + 1);
          if (notlast) {
            p += z * h(i, k + 2);
            h(i, k + 2) -= p * r;
          }
          h(i, k) -= p;
          h(i, k + 1) -= p * q;
        }
      }
    }
  }

  std::vector<Complex> out(static_cast<std::size_t>(nn));
  for (int i = 0; i < nn; ++i) out[i] = {d[i], e[i]};
  return out;
}

// Complex LU with partial pivoting; zero pivots are replaced by a tiny
// multiple of the matrix scale so that inverse iteration at an exact
// eigenvalue still produces the dominant direction.
struct ComplexLu {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;

  explicit ComplexLu(ComplexMatrix a) : lu(std::move(a)), perm(lu.rows()) {
    const std::size_t n = lu.rows();
    double scale = 0.0;
    for (const Complex& v : lu.data()) scale = std::max(scale, std::abs(v));
    const double floor = kEps * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
        std::swap(perm[p], perm[k]);
      }
      if (std::abs(lu(k, k)) < floor) lu(k, k) = floor;
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex f = lu(i, k) / lu(k, k);
        lu(i, k) = f;
        if (f == Complex{}) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
  }

  std::vector<Complex> solve(const std::vector<Complex>& b) const {
    const std::size_t n = lu.rows();
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b[perm[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
      x[i] = s / lu(i, i);
    }
    return x;
  }
};

void normalize(std::vector<Complex>& x) {
  double nrm = 0.0;
  for (const Complex& v : x) nrm += std::norm(v);
  nrm = std::sqrt(nrm);
  if (nrm == 0.0 || !std::isfinite(nrm)) return;
  for (Complex& v : x) v /= nrm;
}

std::int64_t round_scaled(double v, double scale) {
  return static_cast<std::int64_t>(std::llround(v * scale));
}

}  // namespace

Complex ComplexSpectrum::sum() const {
  Complex s{};
  for (const Complex& v : values) s += v;
  return s;
}

ComplexSpectrum eigenvalues(const DenseMatrix& m) {
  if (!m.square()) throw PreconditionError("eigenvalues: matrix not square");
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw PreconditionError("eigenvalues: non-finite entry");
  }
  ComplexSpectrum out;
  if (m.rows() == 0) return out;
  DenseMatrix h = m;
  const Balanced b = balance(h);
  hessenberg(h, b.low, b.high);
  out.values = hessenberg_qr(h, b.low, b.high);
  return out;
}

std::vector<Complex> eigenvector(const DenseMatrix& m, Complex lambda) {
  if (!m.square()) throw PreconditionError("eigenvector: matrix not square");
  const std::size_t n = m.rows();
  ComplexMatrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = m(i, j);
    shifted(i, i) -= lambda;
  }
  const ComplexLu lu(std::move(shifted));
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> x(n);
  for (Complex& v : x) v = {unit(rng), unit(rng)};
  normalize(x);
  for (int it = 0; it < 3; ++it) {
    x = lu.solve(x);
    normalize(x);
  }
  return x;
}

double eigen_residual(const DenseMatrix& m, Complex lambda,
                      const std::vector<Complex>& x) {
  const std::size_t n = m.rows();
  double res = 0.0;
  double xn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = -lambda * x[i];
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
    res = std::max(res, std::abs(s));
    xn = std::max(xn, std::abs(x[i]));
  }
  return xn == 0.0 ? HUGE_VAL : res / xn;
}

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::kA:
      return "A";
    case Operator::kL:
      return "L";
    case Operator::kNBA:
      return "NBA";
    case Operator::kNBL:
      return "NBL";
  }
  return "?";
}

std::optional<Operator> parse_operator(std::string_view s) {
  std::string t(s);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "a") return Operator::kA;
  if (t == "l") return Operator::kL;
  if (t == "nba") return Operator::kNBA;
  if (t == "nbl") return Operator::kNBL;
  return std::nullopt;
}

std::string SpectralFingerprint::serialize() const {
  std::string out;
  const auto fmt = [this](std::int64_t v) {
    const bool neg = v < 0;
    std::uint64_t a = neg ? static_cast<std::uint64_t>(-(v + 1)) + 1
                          : static_cast<std::uint64_t>(v);
    std::uint64_t pow = 1;
    for (int i = 0; i < precision; ++i) pow *= 10;
    std::string frac = std::to_string(a % pow);
    frac.insert(0, static_cast<std::size_t>(precision) - frac.size(), '0');
    return (neg ? "-" : "") + std::to_string(a / pow) + "." + frac;
  };
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    if (i) out += ';';
    out += '(' + fmt(rounded[i].first) + ',' + fmt(rounded[i].second) + ')';
  }
  return out;
}

SpectralFingerprint fingerprint(const ComplexSpectrum& spec, Operator tag,
                                int precision) {
  if (precision < 1 || precision > 12) {
    throw PreconditionError("fingerprint precision must be in 1..12");
  }
  SpectralFingerprint f;
  f.tag = tag;
  f.dimension = spec.size();
  f.precision = precision;
  const double scale = std::pow(10.0, precision);
  f.rounded.reserve(spec.size());
  for (const Complex& v : spec.values) {
    f.rounded.emplace_back(round_scaled(v.real(), scale), round_scaled(v.imag(), scale));
  }
  std::sort(f.rounded.begin(), f.rounded.end());
  return f;
}

bool same_rounded_multiset(const SpectralFingerprint& a, const SpectralFingerprint& b) {
  return a.precision == b.precision && a.rounded == b.rounded;
}

ComplexSpectrum affine_map(const ComplexSpectrum& s, double a, double b) {
  ComplexSpectrum out;
  out.values.reserve(s.size());
  for (const Complex& v : s.values) out.values.push_back(a + b * v);
  return out;
}

double spectral_gap_from_one(const ComplexSpectrum& s) {
  double g = HUGE_VAL;
  for (const Complex& v : s.values) g = std::min(g, std::abs(1.0 - v));
  return g;
}

double spectral_radius(const ComplexSpectrum& s) {
  double r = 0.0;
  for (const Complex& v : s.values) r = std::max(r, std::abs(v));
  return r;
}

std::size_t count_near(const ComplexSpectrum& s, Complex mu, double tol) {
  std::size_t c = 0;
  for (const Complex& v : s.values)
    if (std::abs(v - mu) <= tol) ++c;
  return c;
}

bool multisets_match(const std::vector<Complex>& a, const std::vector<Complex>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a[i] - b[j]) <= tol) adj[i].push_back(j);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_b(n, kNone);
  std::vector<char> seen;
  // Kuhn augmenting paths with an explicit stack.
  for (std::size_t root = 0; root < n; ++root) {
    if (adj[root].empty()) return false;
    seen.assign(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    std::vector<std::size_t> via;  // b-vertex chosen at each level
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      auto& [u, pos] = stack.back();
      if (pos == adj[u].size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const std::size_t v = adj[u][pos++];
      if (seen[v]) continue;
      seen[v] = 1;
      via.push_back(v);
      if (match_b[v] == kNone) {
        augmented = true;
        break;
      }
      stack.emplace_back(match_b[v], 0);
    }
    if (!augmented) return false;
    for (std::size_t k = 0; k < via.size(); ++k) match_b[via[k]] = stack[k].first;
  }
  return true;
}

double matching_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return HUGE_VAL;
  if (a.empty()) return 0.0;
  std::vector<double> cand;
  cand.reserve(a.size() * b.size());
  for (const Complex& x : a)
    for (const Complex& y : b) cand.push_back(std::abs(x - y));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::size_t lo = 0;
  std::size_t hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (multisets_match(a, b, cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return cand[lo];
}

bool conjugate_closed(const ComplexSpectrum& s, double tol) {
  std::vector<Complex> conj;
  conj.reserve(s.size());
  for (const Complex& v : s.values) conj.push_back(std::conj(v));
  return multisets_match(s.values, conj, tol);
}

}  // namespace nbspec
