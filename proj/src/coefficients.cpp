#include "maassforge/coefficients.hpp"

#include <algorithm>

#include "maassforge/parallel.hpp"

namespace maassforge {

namespace {

// Convolution in Z[C_e]: out = x * y.
void convolve(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out, int e) {
  for (int j = 0; j < e; ++j) out[j] = 0;
  for (int i = 0; i < e; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < e; ++j) {
      int k = i + j;
      if (k >= e) k -= e;
      out[k] += x[i] * y[j];
    }
  }
}

struct LocalData {
  SplitKind kind = SplitKind::Inert;
  int alpha = 0;
  int beta = 0;
};

LocalData local_data(const HeckeCharacter& psi, i64 p) {
  const PrimeSplit sp = split_prime(psi.field(), p);
  LocalData d;
  d.kind = sp.kind;
  if (sp.kind != SplitKind::Inert) d.alpha = psi.eval_index(sp.primes_above[0]);
  if (sp.kind == SplitKind::Split) d.beta = psi.eval_index(sp.primes_above[1]);
  return d;
}

// Histogram of psi over the ideals of norm p^k.
void local_histogram(const LocalData& d, int k, int e, std::uint32_t* out) {
  switch (d.kind) {
    case SplitKind::Split:
      for (int i = 0; i <= k; ++i) out[(static_cast<i64>(i) * d.alpha + static_cast<i64>(k - i) * d.beta) % e] += 1;
      break;
    case SplitKind::Inert:
      if (k % 2 == 0) out[0] += 1;
      break;
    case SplitKind::Ramified:
      out[(static_cast<i64>(k) * d.alpha) % e] += 1;
      break;
  }
}

CyclotomicInt from_histogram(const std::uint32_t* h, int e) {
  CyclotomicInt z(e);
  for (int j = 0; j < e; ++j) {
    if (h[j] != 0) z.add_root(j, h[j]);
  }
  return z;
}

}  // namespace

std::shared_ptr<const IdealCoefficients> IdealCoefficients::build(const HeckeCharacter& psi, i64 n_max, int threads) {
  if (n_max < 1) throw InvalidInput("coefficient table: n_max must be at least 1");
  auto out = std::make_shared<IdealCoefficients>();
  IdealCoefficients& f = *out;
  f.psi_ = std::make_shared<const HeckeCharacter>(psi);
  f.n_max_ = n_max;
  f.e_ = psi.exponent();
  const int e = f.e_;
  if ((n_max + 1) > kMaxTableEntries / e) throw ResourceLimit("coefficient table exceeds the cap");
  threads = resolve_threads(threads);

  const std::size_t stride = static_cast<std::size_t>(e);
  f.hist_.assign(static_cast<std::size_t>(n_max + 1) * stride, 0);
  std::uint32_t* H = f.hist_.data();
  H[1 * stride + 0] = 1;

  const SpfSieve sieve(n_max);
  const std::vector<i64> primes = primes_up_to(n_max);

  // Prime powers from the splitting of each prime.
  parallel_chunks(0, static_cast<i64>(primes.size()), 4096, threads, [&](i64 lo, i64 hi) {
    for (i64 idx = lo; idx < hi; ++idx) {
      const i64 p = primes[static_cast<std::size_t>(idx)];
      const LocalData d = local_data(psi, p);
      i64 q = p;
      for (int k = 1;; ++k) {
        local_histogram(d, k, e, H + static_cast<std::size_t>(q) * stride);
        if (q > n_max / p) break;
        q *= p;
      }
    }
  });

  // Everything else as a product over its prime-power factors.
  parallel_chunks(2, n_max + 1, 1 << 16, threads, [&](i64 lo, i64 hi) {
    std::vector<std::uint32_t> acc(stride), tmp(stride);
    auto is_zero = [stride](const std::uint32_t* h) { return std::all_of(h, h + stride, [](std::uint32_t v) { return v == 0; }); };
    for (i64 n = lo; n < hi; ++n) {
      const i64 p = sieve.spf(n);
      i64 q = p;
      i64 m = n / p;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      if (m == 1) continue;  // prime power, already set
      std::copy_n(H + static_cast<std::size_t>(q) * stride, stride, acc.begin());
      bool zero = is_zero(acc.data());
      while (m > 1 && !zero) {
        const i64 r = sieve.spf(m);
        i64 s = r;
        m /= r;
        while (m % r == 0) {
          m /= r;
          s *= r;
        }
        const std::uint32_t* fac = H + static_cast<std::size_t>(s) * stride;
        if (is_zero(fac)) {
          zero = true;
          break;
        }
        convolve(acc.data(), fac, tmp.data(), e);
        acc.swap(tmp);
      }
      if (!zero) std::copy_n(acc.begin(), stride, H + static_cast<std::size_t>(n) * stride);
    }
  });

  std::vector<double> cr(stride), ci(stride);
  for (int j = 0; j < e; ++j) {
    const std::complex<double> z = root_of_unity(j, e);
    cr[static_cast<std::size_t>(j)] = z.real();
    ci[static_cast<std::size_t>(j)] = z.imag();
  }
  f.re_.assign(static_cast<std::size_t>(n_max + 1), 0.0);
  f.im_.assign(static_cast<std::size_t>(n_max + 1), 0.0);
  parallel_chunks(1, n_max + 1, 1 << 16, threads, [&](i64 lo, i64 hi) {
    for (i64 n = lo; n < hi; ++n) {
      const std::uint32_t* h = H + static_cast<std::size_t>(n) * stride;
      double re = 0.0;
      double im = 0.0;
      for (int j = 0; j < e; ++j) {
        if (h[j] == 0) continue;
        re += h[j] * cr[static_cast<std::size_t>(j)];
        im += h[j] * ci[static_cast<std::size_t>(j)];
      }
      f.re_[static_cast<std::size_t>(n)] = re;
      f.im_[static_cast<std::size_t>(n)] = im;
    }
  });
  return out;
}

std::vector<std::uint32_t> IdealCoefficients::histogram(i64 n) const {
  if (n < 1 || n > n_max_) throw InvalidInput("coefficient index outside 1..n_max");
  const auto* h = hist_.data() + static_cast<std::size_t>(n) * static_cast<std::size_t>(e_);
  return {h, h + e_};
}

CyclotomicInt IdealCoefficients::exact(i64 n) const {
  const auto h = histogram(n);
  return from_histogram(h.data(), e_);
}

std::complex<double> IdealCoefficients::value(i64 n) const {
  if (n < 1 || n > n_max_) throw InvalidInput("coefficient index outside 1..n_max");
  return {re_[static_cast<std::size_t>(n)], im_[static_cast<std::size_t>(n)]};
}

i64 IdealCoefficients::ideal_count(i64 n) const {
  i64 s = 0;
  for (auto v : histogram(n)) s += v;
  return s;
}

CyclotomicInt IdealCoefficients::local(i64 p, int k) const {
  if (!is_prime(p) || k < 0) throw InvalidInput("local coefficient: need a prime p and k >= 0");
  std::vector<std::uint32_t> h(static_cast<std::size_t>(e_), 0);
  local_histogram(local_data(*psi_, p), k, e_, h.data());
  return from_histogram(h.data(), e_);
}

}  // namespace maassforge
