#include "orbitq/quadrature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "orbitq/errors.hpp"

namespace orbitq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

Matrix z_rotation(double angle) {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = std::polar(1.0, angle / 2.0);
  z(1, 1) = std::polar(1.0, -angle / 2.0);
  return z;
}

// exp(theta * X / sqrt2) for the root-vector convention X = (E12 - E21)/sqrt2.
Matrix x_rotation(double theta) {
  Matrix x = Matrix::Zero(2, 2);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  x(0, 0) = c;
  x(0, 1) = s;
  x(1, 0) = -s;
  x(1, 1) = c;
  return x;
}

// Kahan-Babuska-Neumaier compensated accumulator.  The self-test sums up to
// millions of same-sign terms; naive summation drifts past the test's own
// tolerance around half a million samples, which would misreport a sound
// rule as broken.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Full Schur orthogonality on the defining representation:
// integral of conj(g_ab) g_cd must be delta_ac delta_bd / 2.
void schur_self_test(const QuadratureRule& rule) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          CompensatedSum re, im;
          for (std::size_t s = 0; s < rule.samples.size(); ++s) {
            const Cplx term =
                rule.weights[s] * std::conj(rule.samples[s](a, b)) * rule.samples[s](c, d);
            re.add(term.real());
            im.add(term.imag());
          }
          const Cplx acc(re.value(), im.value());
          const Cplx want = (a == c && b == d) ? Cplx(0.5, 0) : Cplx(0, 0);
          if (std::abs(acc - want) > 1e-12)
            throw std::logic_error("Euler-angle rule failed its Schur self-test");
        }
}

// Deterministic standard normals: explicit Box-Muller over mt19937_64.
// (std::normal_distribution is implementation-defined, so it cannot back a
// bitwise reproducibility contract.)
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

int QuadratureRule::block_of(std::size_t sample) const {
  if (kind != RuleKind::haar_mc || n_blocks <= 1) return 0;
  const auto b = static_cast<int>(static_cast<std::int64_t>(sample) * n_blocks / n_samples);
  return b < n_blocks ? b : n_blocks - 1;
}

std::string QuadratureRule::descriptor() const {
  if (kind == RuleKind::su2_euler) return "su2:" + std::to_string(order);
  return "mc:" + std::to_string(n_samples) + ":" + std::to_string(seed);
}

void gauss_legendre(int q, std::vector<double>& nodes, std::vector<double>& weights) {
  if (q < 1) throw InvalidArgument("Gauss-Legendre needs at least one node");
  // Newton iteration on the Legendre recurrence.  A Jacobi-matrix eigensolve
  // loses ~1e-12 in the weights past q ~ 50, which the rules' built-in Schur
  // self-test rejects; Newton-polished roots keep both nodes and weights at
  // machine precision for every order used here.
  nodes.resize(static_cast<std::size_t>(q));
  weights.resize(static_cast<std::size_t>(q));
  const int n_half = (q + 1) / 2;
  for (int i = 0; i < n_half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        // One extra step after convergence polishes the last bit.
        double r0 = 1.0, r1 = x;
        for (int k = 2; k <= q; ++k) {
          const double r2 = ((2.0 * k - 1.0) * x * r1 - (k - 1.0) * r0) / k;
          r0 = r1;
          r1 = r2;
        }
        dp = q * (x * r1 - r0) / (x * x - 1.0);
        x -= r1 / dp;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Roots come out ordered descending from the cos guess; store ascending
    // and mirror the symmetric partner explicitly so pairs cancel exactly.
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(q - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(q - 1 - i)] = w;
  }
  if (q % 2 == 1) nodes[static_cast<std::size_t>(q / 2)] = 0.0;
}

QuadratureRule build_su2_quadrature(int order) {
  if (order < 2) throw InvalidArgument("su2 quadrature order must be at least 2");
  QuadratureRule rule;
  rule.kind = RuleKind::su2_euler;
  rule.order = order;

  const int q = (order + 1) / 2;
  std::vector<double> nodes;
  gauss_legendre(q, nodes, rule.theta_weight);
  rule.theta.resize(nodes.size());
  for (std::size_t t = 0; t < nodes.size(); ++t) rule.theta[t] = std::acos(nodes[t]);

  rule.phi.resize(static_cast<std::size_t>(order));
  for (int p = 0; p < order; ++p)
    rule.phi[static_cast<std::size_t>(p)] = kTwoPi * p / order;
  rule.psi = rule.phi;

  const double angle_weight = 1.0 / (2.0 * order * order);
  rule.samples.reserve(nodes.size() * rule.phi.size() * rule.psi.size());
  for (std::size_t t = 0; t < rule.theta.size(); ++t) {
    const Matrix xrot = x_rotation(rule.theta[t]);
    const double w = rule.theta_weight[t] * angle_weight;
    for (double phi : rule.phi) {
      const Matrix zx = z_rotation(phi) * xrot;
      for (double psi : rule.psi) {
        rule.samples.push_back(zx * z_rotation(psi));
        rule.weights.push_back(w);
        rule.reported_mass += w;
      }
    }
  }
  schur_self_test(rule);
  return rule;
}

QuadratureRule build_haar_mc(int n, std::int64_t N, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("haar-mc needs n >= 2");
  if (N < 10000) throw InvalidArgument("haar-mc needs at least 10^4 samples");
  QuadratureRule rule;
  rule.kind = RuleKind::haar_mc;
  rule.n_samples = N;
  rule.seed = seed;
  rule.n_blocks = 100;
  rule.samples.reserve(static_cast<std::size_t>(N));
  rule.weights.assign(static_cast<std::size_t>(N), 1.0 / static_cast<double>(N));
  rule.reported_mass = 1.0;

  GaussianStream gauss(seed);
  const double inv_sqrt2 = 0.70710678118654752440;
  Matrix ginibre(n, n);
  for (std::int64_t s = 0; s < N; ++s) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ginibre(i, j) = Cplx(gauss.next(), gauss.next()) * inv_sqrt2;
    Eigen::HouseholderQR<Matrix> qr(ginibre);
    Matrix u = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
      const Cplx d = r(j, j);
      u.col(j) *= d / std::abs(d);  // Haar on U(n) (phase-corrected QR)
    }
    const Cplx det = u.determinant();
    u *= std::exp(-std::log(det) / static_cast<double>(n));  // scalar to SU(n)
    if ((u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::logic_error("haar-mc produced a non-unitary sample");
    rule.samples.push_back(std::move(u));
  }
  return rule;
}

}  // namespace orbitq
