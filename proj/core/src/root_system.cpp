#include "orbitq/root_system.hpp"

#include <numeric>

#include "orbitq/errors.hpp"

namespace orbitq {

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (coords.size() != o.coords.size()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

WeightVec& WeightVec::operator*=(const Rat& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

bool WeightVec::is_zero() const {
  for (const auto& c : coords)
    if (c != Rat(0)) return false;
  return true;
}

std::string WeightVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += to_string(coords[i]);
  }
  return out + ")";
}

RootSystem build_root_system(int n) {
  if (n < 2) throw InvalidArgument("build_root_system: need n >= 2, got " + std::to_string(n));
  RootSystem rs;
  rs.n = n;
  rs.rank = n - 1;

  // Positive roots of A_{n-1} are e_j - e_k for 1 <= j < k <= n, i.e. the
  // sums alpha_j + ... + alpha_{k-1} of consecutive simple roots.
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      RootVec r;
      r.coords.assign(rs.rank, 0);
      for (int i = j; i < k; ++i) r.coords[i] = 1;
      rs.positive_roots.push_back(std::move(r));
    }
  }

  rs.cartan.assign(rs.rank, std::vector<std::int64_t>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) {
    rs.cartan[i][i] = 2;
    if (i + 1 < rs.rank) rs.cartan[i][i + 1] = rs.cartan[i + 1][i] = -1;
  }

  // Exact inverse by Gauss-Jordan over Q.  rank <= a handful, cost irrelevant.
  const int r = rs.rank;
  std::vector<std::vector<Rat>> aug(r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rat(rs.cartan[i][j]);
    aug[i][r + i] = Rat(1);
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (piv < r && aug[piv][col] == Rat(0)) ++piv;
    if (piv == r) throw std::logic_error("Cartan matrix singular");
    std::swap(aug[piv], aug[col]);
    const Rat d = aug[col][col];
    for (auto& x : aug[col]) x /= d;
    for (int row = 0; row < r; ++row) {
      if (row == col || aug[row][col] == Rat(0)) continue;
      const Rat f = aug[row][col];
      for (int j = 0; j < 2 * r; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  rs.cartan_inverse.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.cartan_inverse[i][j] = aug[i][r + j];

  return rs;
}

namespace {

void check_rank(const RootSystem& rs, const WeightVec& w, const char* who) {
  if (static_cast<int>(w.coords.size()) != rs.rank)
    throw InvalidArgument(std::string(who) + ": weight has rank " +
                          std::to_string(w.coords.size()) + ", expected " +
                          std::to_string(rs.rank));
}

bool is_root_of(const RootSystem& rs, const RootVec& alpha) {
  for (const auto& r : rs.positive_roots) {
    if (alpha == r) return true;
    bool neg = true;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
      if (alpha.coords[i] != -r.coords[i]) { neg = false; break; }
    if (neg && alpha.coords.size() == r.coords.size()) return true;
  }
  return false;
}

// (lambda, alpha) = sum_j c_j lambda_j: fundamental weights are dual to the
// simple roots under the length-2 normalization.
Rat form_weight_root(const WeightVec& lambda, const RootVec& alpha) {
  Rat acc(0);
  for (std::size_t j = 0; j < alpha.coords.size(); ++j)
    acc += Rat(alpha.coords[j]) * lambda.coords[j];
  return acc;
}

Rat form_root_root(const RootSystem& rs, const RootVec& a, const RootVec& b) {
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      acc += Rat(a.coords[i]) * Rat(rs.cartan[i][j]) * Rat(b.coords[j]);
  return acc;
}

}  // namespace

Rat pair_weight_coroot(const RootSystem& rs, const WeightVec& lambda, const RootVec& alpha) {
  check_rank(rs, lambda, "pair_weight_coroot");
  if (static_cast<int>(alpha.coords.size()) != rs.rank || !is_root_of(rs, alpha))
    throw InvalidArgument("pair_weight_coroot: not a root of this system");
  return Rat(2) * form_weight_root(lambda, alpha) / form_root_root(rs, alpha, alpha);
}

Rat invariant_form(const RootSystem& rs, const WeightVec& lambda, const WeightVec& mu) {
  check_rank(rs, lambda, "invariant_form");
  check_rank(rs, mu, "invariant_form");
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      acc += lambda.coords[i] * rs.cartan_inverse[i][j] * mu.coords[j];
  return acc;
}

WeightVec root_to_weight(const RootSystem& rs, const RootVec& alpha) {
  if (static_cast<int>(alpha.coords.size()) != rs.rank)
    throw InvalidArgument("root_to_weight: rank mismatch");
  WeightVec w;
  w.coords.assign(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      w.coords[i] += Rat(alpha.coords[j]) * Rat(rs.cartan[j][i]);
  return w;
}

bool is_integral(const WeightVec& xi) {
  for (const auto& c : xi.coords)
    if (!is_integer(c)) return false;
  return true;
}

bool is_dominant(const WeightVec& xi) {
  for (const auto& c : xi.coords)
    if (c < Rat(0)) return false;
  return true;
}

StabilizerSplit stabilizer_split(const RootSystem& rs, const WeightVec& xi) {
  check_rank(rs, xi, "stabilizer_split");
  if (!is_dominant(xi)) throw InvalidArgument("stabilizer_split: weight must be dominant");
  if (xi.is_zero())
    throw DegenerateOrbitError("stabilizer_split: zero weight gives a point orbit");
  StabilizerSplit split;
  for (const auto& alpha : rs.positive_roots) {
    if (form_weight_root(xi, alpha) == Rat(0))
      split.stabilizer.push_back(alpha);
    else
      split.complement.push_back(alpha);
  }
  return split;
}

WeightVec delta_xi(const RootSystem& rs, const WeightVec& xi) {
  const auto split = stabilizer_split(rs, xi);
  WeightVec d;
  d.coords.assign(rs.rank, Rat(0));
  for (const auto& alpha : split.complement) d += root_to_weight(rs, alpha);
  d *= Rat(1, 2);
  return d;
}

std::optional<Rat> einstein_constant(const RootSystem& rs, const WeightVec& xi) {
  const WeightVec d = delta_xi(rs, xi);
  // Need delta = t xi with one rational t; then lambda = 2t.
  std::optional<Rat> t;
  for (int i = 0; i < rs.rank; ++i) {
    if (xi.coords[i] == Rat(0)) {
      if (d.coords[i] != Rat(0)) return std::nullopt;
      continue;
    }
    const Rat ti = d.coords[i] / xi.coords[i];
    if (t && *t != ti) return std::nullopt;
    t = ti;
  }
  if (!t) return std::nullopt;
  return Rat(2) * *t;
}

WeightVec rho_weight(const RootSystem& rs) {
  WeightVec rho;
  rho.coords.assign(rs.rank, Rat(1));
  return rho;
}

std::int64_t weyl_dim(const RootSystem& rs, const WeightVec& lambda) {
  check_rank(rs, lambda, "weyl_dim");
  if (!is_dominant(lambda) || !is_integral(lambda))
    throw InvalidArgument("weyl_dim: highest weight must be dominant integral, got " +
                          lambda.str());
  const WeightVec rho = rho_weight(rs);
  WeightVec shifted = lambda;
  shifted += rho;
  Rat dim(1);
  for (const auto& alpha : rs.positive_roots)
    dim *= form_weight_root(shifted, alpha) / form_weight_root(rho, alpha);
  if (!is_integer(dim) || dim <= Rat(0))
    throw std::logic_error("weyl_dim: non-integer dimension, formula misapplied");
  return dim.numerator();
}

}  // namespace orbitq
