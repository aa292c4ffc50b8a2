#pragma once
// Bounded extension of polynomials from a distinguished variety W to G:
// a bidisk extension G of f o pi (supplied by a provider) is symmetrized,
// H = (G(z, w) + G(w, z)) / 2, and rewritten as a rational function of (s, p).

#include <cstdint>
#include <memory>
#include <string>

#include "gdet/bipoly.hpp"
#include "gdet/variety.hpp"

namespace gdet {

/// Produces a rational G on the bidisk with G = f o pi on V = pi^{-1}(W).
class ExtensionProvider {
 public:
  virtual ~ExtensionProvider() = default;
  virtual std::string name() const = 0;
  virtual RatFun extend(const VarietySpec& v, const BiPoly& f) const = 0;
};

/// G = f o pi.
class TrivialProvider final : public ExtensionProvider {
 public:
  std::string name() const override { return "trivial"; }
  RatFun extend(const VarietySpec& v, const BiPoly& f) const override;
};

/// Returns a fixed user-supplied G regardless of the input.
class FixedProvider final : public ExtensionProvider {
 public:
  explicit FixedProvider(RatFun g, std::string label = "user");
  std::string name() const override { return label_; }
  RatFun extend(const VarietySpec& v, const BiPoly& f) const override;

 private:
  RatFun g_;
  std::string label_;
};

/// max |G - f o pi| over sampled fibers of the variety.
double provider_gap(const VarietySpec& v, const BiPoly& f, const RatFun& g, int samples,
                    std::uint64_t seed);

/// F in (s, p) with F o pi = (G + G o swap) / 2. When numerator and denominator
/// of G are both symmetric, they are rewritten directly.
RatFun symmetrize_rational(const RatFun& g);

struct ExtensionResult {
  RatFun F;
  /// The no-boundary-singularity hypothesis passed its sampled check.
  bool hypothesis_ok;
  double provider_gap;
  double agreement_gap;
};

/// Runs provider -> symmetrize; checks the provider certificate (gap < 1e-8)
/// and F = f on variety samples (within 1e-8). Certificate failures throw.
ExtensionResult extend_polynomial(const VarietySpec& v, const BiPoly& f,
                                  const ExtensionProvider& provider, std::uint64_t seed = 0,
                                  int samples = 50);

struct AlphaEstimate {
  double alpha_hat;  // empirical lower bound for the extension constant
  double sup_G;      // sampled sup |F| over the closure of G
  double sup_W;      // sampled sup |f| over the closure of W in G
};

/// Ratio of sampled sups; throws PreconditionError when f vanishes on the samples of W.
AlphaEstimate estimate_alpha(const VarietySpec& v, const BiPoly& f, const RatFun& F,
                             int grid_n = 64);

}  // namespace gdet
