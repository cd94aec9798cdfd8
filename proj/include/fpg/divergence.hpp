#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

enum class Generator { Fkl, Rkl, Js, ChiSq, Tv };

/// One row of the generator catalog: the convex function f defining the
/// divergence, its derivative f' (the per-state learning signal), and the
/// slope at infinity when it exists. f(1) = 0 for every entry.
struct GeneratorSpec {
  Generator name;
  double (*f)(double u);
  double (*fprime)(double u);
  std::optional<double> fprime_at_infinity;

  double value(double u) const;       // f(u), u > 0 required
  double derivative(double u) const;  // f'(u), u > 0 required
};

const GeneratorSpec& generator_catalog(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);
std::string generator_name(Generator g);

/// Probability vector over a finite support.
struct FiniteDistribution {
  std::vector<double> probs;

  std::size_t support_size() const { return probs.size(); }
  /// Throws std::domain_error unless entries are non-negative and sum to 1
  /// within 1e-9.
  void validate() const;
};

/// D_f(p || q) = sum_{q>0} q(x) f(p(x)/q(x)) + f'(inf) * p[q = 0].
///
/// Terms with p(x) = q(x) = 0 contribute 0. Logs inside f are floored at
/// 1e-30, which keeps the value finite when p(x) = 0 on a positive-q state
/// for generators with f(0+) = inf (RKL).
double f_divergence(const GeneratorSpec& spec, const FiniteDistribution& p,
                    const FiniteDistribution& q);

/// Dirac goal mass with the zero probabilities floored at epsilon:
/// epsilon everywhere, 1 - (n-1)*epsilon at the goal. Requires
/// 0 < epsilon < 1/n.
FiniteDistribution clip_dirac(int goal_index, int support_size, double epsilon);

/// Floor applied inside every log evaluated by the catalog.
inline constexpr double kLogFloor = 1e-30;

}  // namespace fpg
