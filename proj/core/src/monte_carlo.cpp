#include "circe/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "circe/parallel.hpp"

namespace circe::mc {

std::string ensemble_name(Ensemble e) { return e == Ensemble::cue ? "CUE" : "COE"; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed + splitmix64(stream)));
}

Matrix sample_cue(int N, Rng& rng) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(N, N);
  for (int c = 0; c < N; ++c) {
    for (int r = 0; r < N; ++r) g(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int k = 0; k < N; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    q.col(k) *= mag > 0.0 ? diag / mag : Complex(1.0);
  }
  return q;
}

Matrix sample_coe(int N, Rng& rng) {
  Matrix s = sample_cue(N, rng);
  return s * s.transpose();
}

Observable entry_product(std::vector<std::pair<int, int>> entries, std::vector<std::pair<int, int>> conj_entries) {
  int block = 1;
  std::string name = "S";
  for (auto [r, c] : entries) {
    block = std::max({block, r + 1, c + 1});
    name += "_" + std::to_string(r + 1) + std::to_string(c + 1);
  }
  name += " conj(S)";
  for (auto [r, c] : conj_entries) {
    block = std::max({block, r + 1, c + 1});
    name += "_" + std::to_string(r + 1) + std::to_string(c + 1);
  }
  return Observable{name, block, [entries = std::move(entries), conj = std::move(conj_entries)](const Matrix& m) {
                      Complex v(1.0);
                      for (auto [r, c] : entries) v *= m(r, c);
                      for (auto [r, c] : conj) v *= std::conj(m(r, c));
                      return v;
                    }};
}

namespace {

Complex power_sum(const Matrix& block, const Partition& lambda) {
  Complex out(1.0);
  if (lambda.empty()) return out;
  const int top = lambda.parts().front();
  std::vector<Complex> traces(top + 1);
  Matrix power = block;
  traces[1] = power.trace();
  for (int k = 2; k <= top; ++k) {
    power = power * block;
    traces[k] = power.trace();
  }
  for (int q : lambda.parts()) out *= traces[q];
  return out;
}

}  // namespace

Observable trace_product(const Partition& lambda, const Partition& mu, int M) {
  if (M < 1) throw std::invalid_argument("block size must be at least 1");
  std::string name = "p" + lambda.to_string() + "(Z)";
  if (!mu.empty()) name += " conj(p" + mu.to_string() + "(Z))";
  return Observable{name, M, [lambda, mu, M](const Matrix& m) {
                      const Matrix block = m.topLeftCorner(M, M);
                      Complex v = power_sum(block, lambda);
                      if (!mu.empty()) v *= std::conj(power_sum(block, mu));
                      return v;
                    }};
}

EstimateResult estimate_moment(const SampleConfig& config, const Observable& observable) {
  if (config.N < 1) throw std::invalid_argument("N must be at least 1");
  if (config.batch_count < 2 || config.sample_count < static_cast<std::uint64_t>(config.batch_count)) {
    throw std::invalid_argument("need sample_count >= batch_count >= 2");
  }
  if (observable.block_size > config.N) {
    throw std::invalid_argument("block size " + std::to_string(observable.block_size) + " exceeds N = " +
                                std::to_string(config.N));
  }
  const auto batches = static_cast<std::uint64_t>(config.batch_count);
  std::vector<Complex> batch_means(batches);
  std::vector<std::uint64_t> batch_sizes(batches);
  parallel_for(batches, resolve_workers(config.workers), [&](std::size_t b) {
    const std::uint64_t count = config.sample_count / batches + (b < config.sample_count % batches ? 1 : 0);
    Rng rng = stream_rng(config.seed, b);
    Complex sum(0.0);
    for (std::uint64_t i = 0; i < count; ++i) {
      const Matrix m = config.ensemble == Ensemble::cue ? sample_cue(config.N, rng) : sample_coe(config.N, rng);
      sum += observable.evaluate(m);
    }
    batch_means[b] = sum / static_cast<double>(count);
    batch_sizes[b] = count;
  });

  EstimateResult out;
  out.sample_count = config.sample_count;
  Complex total(0.0);
  for (std::uint64_t b = 0; b < batches; ++b) total += batch_means[b] * static_cast<double>(batch_sizes[b]);
  out.mean = total / static_cast<double>(config.sample_count);
  double spread = 0.0;
  for (const auto& m : batch_means) spread += std::norm(m - out.mean);
  out.std_error = std::sqrt(spread / static_cast<double>(batches - 1) / static_cast<double>(batches));
  return out;
}

nlohmann::json Comparison::to_json() const {
  return nlohmann::json{{"observable", observable},
                        {"N", N},
                        {"M", M},
                        {"symbolic", symbolic},
                        {"mean", mean.real()},
                        {"mean_imag", mean.imag()},
                        {"stderr", std_error},
                        {"sigma_tol", sigma_tol},
                        {"trunc_bound", trunc_bound},
                        {"generator", kGeneratorName},
                        {"verdict", pass ? "pass" : "fail"}};
}

Comparison compare(std::string observable, int N, int M, double symbolic, const EstimateResult& empirical,
                   double sigma_tol, double trunc_bound) {
  Comparison c;
  c.observable = std::move(observable);
  c.N = N;
  c.M = M;
  c.symbolic = symbolic;
  c.mean = empirical.mean;
  c.std_error = empirical.std_error;
  c.sigma_tol = sigma_tol;
  c.trunc_bound = trunc_bound;
  c.pass = std::abs(empirical.mean - Complex(symbolic)) <= c.allowed();
  return c;
}

double truncation_allowance(const MSeries& series, int n, int M, int N) {
  double largest = 0.0;
  for (int k = 0; k <= series.cap(); ++k) {
    for (const auto& c : series.coefficient(k).coefficients()) largest = std::max(largest, std::abs(c.get_d()));
  }
  const int next = series.cap() + 1;
  const double u = 1.0 / (N + 1.0);
  return largest * std::pow(u, next) * std::pow(static_cast<double>(M), std::min(next, 2 * n));
}

BigRational evaluate_trace_series(const MSeries& series, long M, long N) {
  const BigRational u = make_rational(1, N + 1);
  const BigRational m(M);
  BigRational value = 0;
  BigRational power = 1;
  for (int k = 0; k <= series.cap(); ++k) {
    value += series.coefficient(k).evaluate(m) * power;
    power *= u;
  }
  return value;
}

}  // namespace circe::mc
