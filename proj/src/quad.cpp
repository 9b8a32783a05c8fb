#include "boost_entropy/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

namespace boost_entropy::quad {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1], nodes in
// ascending order. Gauss weights are zero at the pure Kronrod nodes.
constexpr std::array<double, 8> kHalfNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kHalfKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 8> kHalfGauss = {
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327};

constexpr std::size_t kPoints = 15;

struct Rule {
  std::array<double, kPoints> node;
  std::array<double, kPoints> kronrod;
  std::array<double, kPoints> gauss;
};

constexpr Rule make_rule() {
  Rule rule{};
  for (std::size_t i = 0; i < 8; ++i) {
    rule.node[i] = -kHalfNodes[i];
    rule.kronrod[i] = kHalfKronrod[i];
    rule.gauss[i] = kHalfGauss[i];
    rule.node[kPoints - 1 - i] = kHalfNodes[i];
    rule.kronrod[kPoints - 1 - i] = kHalfKronrod[i];
    rule.gauss[kPoints - 1 - i] = kHalfGauss[i];
  }
  return rule;
}

constexpr Rule kRule = make_rule();
// Weighted radius u = r / w beyond which the Gaussian weight is below 1e-60.
constexpr double kWeightedCore = 12.0;

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
double max_abs(const Vec<N>& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

// Neumaier-compensated accumulator.
struct Compensated {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

template <std::size_t N>
struct Box {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
  Vec<N> value{};
  double error = 0.0;
  int split_axis = 0;
  bool live = true;
};

template <std::size_t N>
class Engine {
 public:
  Engine(const VectorSphericalDomain<N>& domain, const Tolerance& tol,
         std::size_t budget)
      : domain_(domain), tol_(tol), budget_(budget) {
    weighted_ = domain.gaussian_width > 0.0;
    scale_ = weighted_ ? domain.gaussian_width : 1.0;
  }

  VectorQuadResult<N> run() {
    constexpr double kPi = std::numbers::pi;
    const double u_max = domain_.r_max / scale_;
    // A weighted radial range far wider than the Gaussian starts split at
    // kWeightedCore so the first rule sees the bulk of the weight.
    if (weighted_ && u_max > kWeightedCore) {
      boxes_.push_back(evaluate({0.0, 0.0, 0.0}, {kWeightedCore, kPi, 2.0 * kPi}));
      boxes_.push_back(evaluate({kWeightedCore, 0.0, 0.0}, {u_max, kPi, 2.0 * kPi}));
    } else {
      boxes_.push_back(evaluate({0.0, 0.0, 0.0}, {u_max, kPi, 2.0 * kPi}));
    }
    using Entry = std::pair<double, std::size_t>;
    // Largest error first; ties resolved towards the older box.
    auto worse = [](const Entry& a, const Entry& b) {
      return a.first < b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    for (std::size_t i = 0; i < boxes_.size(); ++i) queue.emplace(boxes_[i].error, i);

    auto [value, error] = totals();
    std::size_t since_refresh = 0;
    while (error > tol_.allowed(max_abs<N>(value))) {
      if (evaluations_ + 2 * kEvaluationsPerBox > budget_ || queue.empty()) {
        break;
      }
      const std::size_t index = queue.top().second;
      queue.pop();
      Box<N> parent = boxes_[index];
      const int axis = parent.split_axis;
      const double mid = 0.5 * (parent.lo[axis] + parent.hi[axis]);
      if (!(mid > parent.lo[axis] && mid < parent.hi[axis])) break;

      auto left_hi = parent.hi;
      left_hi[axis] = mid;
      auto right_lo = parent.lo;
      right_lo[axis] = mid;
      boxes_[index].live = false;
      boxes_.push_back(evaluate(parent.lo, left_hi));
      boxes_.push_back(evaluate(right_lo, parent.hi));
      queue.emplace(boxes_[boxes_.size() - 2].error, boxes_.size() - 2);
      queue.emplace(boxes_.back().error, boxes_.size() - 1);

      for (std::size_t c = 0; c < N; ++c) {
        value[c] += boxes_[boxes_.size() - 2].value[c] +
                    boxes_.back().value[c] - parent.value[c];
      }
      error += boxes_[boxes_.size() - 2].error + boxes_.back().error -
               parent.error;
      if (++since_refresh == 64) {
        std::tie(value, error) = totals();
        since_refresh = 0;
      }
    }
    std::tie(value, error) = totals();

    VectorQuadResult<N> result;
    result.value = value;
    result.error_estimate = error;
    result.evaluations = evaluations_;
    result.converged = error <= tol_.allowed(max_abs<N>(value));
    return result;
  }

 private:
  std::pair<Vec<N>, double> totals() const {
    std::array<Compensated, N> v{};
    Compensated e;
    for (const auto& box : boxes_) {
      if (!box.live) continue;
      for (std::size_t c = 0; c < N; ++c) v[c].add(box.value[c]);
      e.add(box.error);
    }
    Vec<N> out{};
    for (std::size_t c = 0; c < N; ++c) out[c] = v[c].value();
    return {out, e.value()};
  }

  Box<N> evaluate(const std::array<double, 3>& lo,
                  const std::array<double, 3>& hi) {
    std::array<std::array<double, kPoints>, 3> x{};
    std::array<double, 3> half{};
    for (int a = 0; a < 3; ++a) {
      const double c = 0.5 * (lo[a] + hi[a]);
      half[a] = 0.5 * (hi[a] - lo[a]);
      for (std::size_t i = 0; i < kPoints; ++i) {
        x[a][i] = c + half[a] * kRule.node[i];
      }
    }

    constexpr double kInvPi32 = 0.17958712212516656;  // pi^{-3/2}
    Vec<N> full{};
    std::array<Vec<N>, 3> gauss_along{};
    for (std::size_t i = 0; i < kPoints; ++i) {
      const double u = x[0][i];
      const double radial =
          weighted_ ? u * u * std::exp(-u * u) * kInvPi32 : u * u;
      Vec<N> sum_jk{};
      Vec<N> sum_gj{};
      Vec<N> sum_gk{};
      for (std::size_t j = 0; j < kPoints; ++j) {
        const double theta = x[1][j];
        const double jac = radial * std::sin(theta);
        Vec<N> sum_k{};
        Vec<N> sum_k_gauss{};
        for (std::size_t k = 0; k < kPoints; ++k) {
          const SphericalPoint p{scale_ * u, theta, x[2][k]};
          const Vec<N> f = domain_.integrand(p);
          for (std::size_t c = 0; c < N; ++c) {
            const double fc = f[c] * jac;
            sum_k[c] += kRule.kronrod[k] * fc;
            sum_k_gauss[c] += kRule.gauss[k] * fc;
          }
        }
        for (std::size_t c = 0; c < N; ++c) {
          sum_jk[c] += kRule.kronrod[j] * sum_k[c];
          sum_gj[c] += kRule.gauss[j] * sum_k[c];
          sum_gk[c] += kRule.kronrod[j] * sum_k_gauss[c];
        }
      }
      for (std::size_t c = 0; c < N; ++c) {
        full[c] += kRule.kronrod[i] * sum_jk[c];
        gauss_along[0][c] += kRule.gauss[i] * sum_jk[c];
        gauss_along[1][c] += kRule.kronrod[i] * sum_gj[c];
        gauss_along[2][c] += kRule.kronrod[i] * sum_gk[c];
      }
    }
    evaluations_ += kEvaluationsPerBox;

    const double volume = half[0] * half[1] * half[2];
    Box<N> box;
    box.lo = lo;
    box.hi = hi;
    double worst = -1.0;
    for (int a = 0; a < 3; ++a) {
      double diff = 0.0;
      for (std::size_t c = 0; c < N; ++c) {
        diff = std::max(diff, std::abs(full[c] - gauss_along[a][c]) * volume);
      }
      box.error += diff;
      if (diff > worst) {
        worst = diff;
        box.split_axis = a;
      }
    }
    for (std::size_t c = 0; c < N; ++c) box.value[c] = full[c] * volume;
    return box;
  }

  const VectorSphericalDomain<N>& domain_;
  Tolerance tol_;
  std::size_t budget_;
  bool weighted_ = false;
  double scale_ = 1.0;
  std::size_t evaluations_ = 0;
  std::vector<Box<N>> boxes_;
};

void check_standard_inputs(double r_max, double tol, std::size_t budget) {
  if (!(tol > 1e-13 && tol < 1e-2)) {
    throw DomainError("quadrature tolerance must lie in (1e-13, 1e-2)");
  }
  if (budget < 1000) {
    throw DomainError("quadrature budget must be at least 1000 evaluations");
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw DomainError("quadrature radius must be positive and finite");
  }
}

void check_domain(double r_max, double width) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw DomainError("quadrature radius must be positive and finite");
  }
  if (!(width >= 0.0) || !std::isfinite(width)) {
    throw DomainError("Gaussian width must be finite and non-negative");
  }
}

}  // namespace

Vec3 SphericalPoint::cartesian() const noexcept {
  const double s = std::sin(theta);
  return {r * s * std::cos(phi), r * s * std::sin(phi), r * std::cos(theta)};
}

double Tolerance::allowed(double magnitude) const noexcept {
  const double floor = magnitude <= absolute_below ? absolute : 0.0;
  return std::max(relative * magnitude, floor);
}

template <std::size_t N>
VectorQuadResult<N> integrate_spherical_components(
    const VectorSphericalDomain<N>& domain, const Tolerance& tol,
    std::size_t budget) {
  check_domain(domain.r_max, domain.gaussian_width);
  return Engine<N>(domain, tol, budget).run();
}

template VectorQuadResult<1> integrate_spherical_components<1>(
    const VectorSphericalDomain<1>&, const Tolerance&, std::size_t);
template VectorQuadResult<2> integrate_spherical_components<2>(
    const VectorSphericalDomain<2>&, const Tolerance&, std::size_t);
template VectorQuadResult<3> integrate_spherical_components<3>(
    const VectorSphericalDomain<3>&, const Tolerance&, std::size_t);
template VectorQuadResult<4> integrate_spherical_components<4>(
    const VectorSphericalDomain<4>&, const Tolerance&, std::size_t);

QuadResult integrate_spherical(const SphericalDomain& domain,
                               const Tolerance& tol, std::size_t budget) {
  VectorSphericalDomain<1> wrapped{
      domain.r_max,
      [&f = domain.integrand](const SphericalPoint& p) {
        return Vec<1>{f(p)};
      },
      domain.gaussian_width};
  const auto r = integrate_spherical_components<1>(wrapped, tol, budget);
  return {r.value[0], r.error_estimate, r.evaluations, r.converged};
}

QuadResult integrate_spherical(const SphericalDomain& domain, double tol,
                               std::size_t budget) {
  check_standard_inputs(domain.r_max, tol, budget);
  return integrate_spherical(domain, Tolerance::standard(tol), budget);
}

ComplexQuadResult integrate_spherical(const ComplexSphericalDomain& domain,
                                      double tol, std::size_t budget) {
  check_standard_inputs(domain.r_max, tol, budget);
  VectorSphericalDomain<2> wrapped{
      domain.r_max,
      [&f = domain.integrand](const SphericalPoint& p) {
        const auto v = f(p);
        return Vec<2>{v.real(), v.imag()};
      },
      domain.gaussian_width};
  const auto r = integrate_spherical_components<2>(
      wrapped, Tolerance::standard(tol), budget);
  return {{r.value[0], r.value[1]}, r.error_estimate, r.evaluations,
          r.converged};
}

}  // namespace boost_entropy::quad
