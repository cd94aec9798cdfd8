#include "fpg/divergence.hpp"

#include <cmath>
#include <stdexcept>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

double safe_log(double u) { return std::log(u < kLogFloor ? kLogFloor : u); }

double fkl_f(double u) { return u == 0.0 ? 0.0 : u * safe_log(u); }
double fkl_fp(double u) { return 1.0 + safe_log(u); }

double rkl_f(double u) { return -safe_log(u); }
double rkl_fp(double u) { return -1.0 / (u < kLogFloor ? kLogFloor : u); }

// u log u - (1+u) log((1+u)/2), written so that f(0) = log 2 exactly.
double js_f(double u) {
  const double a = u == 0.0 ? 0.0 : u * safe_log(u);
  return a - (1.0 + u) * safe_log(0.5 * (1.0 + u));
}
double js_fp(double u) { return safe_log(2.0 * u / (1.0 + u)); }

// The catalog lists chi^2 with f(u) = (u-1)^2 / 2; its analytic derivative
// is u - 1 and that is what the signal code uses.
double chi2_f(double u) { return 0.5 * (u - 1.0) * (u - 1.0); }
double chi2_fp(double u) { return u - 1.0; }

double tv_f(double u) { return 0.5 * std::abs(u - 1.0); }
double tv_fp(double u) { return u > 1.0 ? 0.5 : (u < 1.0 ? -0.5 : 0.0); }

const GeneratorSpec kCatalog[] = {
    {Generator::Fkl, fkl_f, fkl_fp, std::nullopt},
    {Generator::Rkl, rkl_f, rkl_fp, 0.0},
    {Generator::Js, js_f, js_fp, std::log(2.0)},
    {Generator::ChiSq, chi2_f, chi2_fp, std::nullopt},
    {Generator::Tv, tv_f, tv_fp, 0.5},
};

}  // namespace

double GeneratorSpec::value(double u) const {
  if (!(u > 0.0)) throw std::domain_error("generator value: u must be positive");
  return f(u);
}

double GeneratorSpec::derivative(double u) const {
  if (!(u > 0.0)) throw std::domain_error("generator derivative: u must be positive");
  return fprime(u);
}

const GeneratorSpec& generator_catalog(Generator g) {
  return kCatalog[static_cast<int>(g)];
}

std::optional<Generator> generator_from_name(std::string_view name) {
  if (name == "fkl") return Generator::Fkl;
  if (name == "rkl") return Generator::Rkl;
  if (name == "js") return Generator::Js;
  if (name == "chi2") return Generator::ChiSq;
  if (name == "tv") return Generator::Tv;
  return std::nullopt;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::Fkl: return "fkl";
    case Generator::Rkl: return "rkl";
    case Generator::Js: return "js";
    case Generator::ChiSq: return "chi2";
    case Generator::Tv: return "tv";
  }
  return "?";
}

void FiniteDistribution::validate() const {
  double total = 0.0;
  for (double v : probs) {
    if (v < 0.0) throw std::domain_error("distribution entry is negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::domain_error("distribution does not sum to 1");
}

double f_divergence(const GeneratorSpec& spec, const FiniteDistribution& p,
                    const FiniteDistribution& q) {
  if (p.probs.size() != q.probs.size())
    throw ShapeError("f_divergence: support sizes differ");
  double sum = 0.0;
  double p_on_zero_q = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double pi = p.probs[i];
    const double qi = q.probs[i];
    if (qi > 0.0) {
      sum += qi * spec.f(pi / qi);
    } else if (pi > 0.0) {
      p_on_zero_q += pi;
    }
    // q = p = 0 contributes nothing (limit convention).
  }
  if (p_on_zero_q > 0.0) {
    if (!spec.fprime_at_infinity)
      throw UndefinedDivergenceError(
          "f_divergence: target has zero-mass states under " +
          generator_name(spec.name) + ", which has no f'(inf)");
    sum += *spec.fprime_at_infinity * p_on_zero_q;
  }
  return sum;
}

FiniteDistribution clip_dirac(int goal_index, int support_size, double epsilon) {
  if (support_size <= 0) throw std::domain_error("clip_dirac: empty support");
  if (goal_index < 0 || goal_index >= support_size)
    throw std::domain_error("clip_dirac: goal index out of range");
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / support_size))
    throw std::domain_error("clip_dirac: epsilon must lie in (0, 1/support_size)");
  FiniteDistribution d;
  d.probs.assign(support_size, epsilon);
  d.probs[goal_index] = 1.0 - (support_size - 1) * epsilon;
  return d;
}

}  // namespace fpg
