#pragma once

#include <functional>
#include <string>
#include <vector>

#include "riccheck/construct/conformal.hpp"
#include "riccheck/construct/kahler.hpp"
#include "riccheck/residuals/quasi.hpp"
#include "riccheck/residuals/ricci_hessian.hpp"
#include "riccheck/residuals/soliton.hpp"
#include "riccheck/skr/profile.hpp"

namespace riccheck::gallery {

// What a checker is expected to do on a scenario: stay below tol at every
// sampled point, or miss with a max residual of at least floor.
struct Expectation {
  std::string checker;
  bool expect_pass = true;
  double tol = 1e-9;
  double floor = 1e-2;
};

// A fully assembled verification scenario. Which bundles are meaningful
// depends on the kind; the has_* flags say which ones were built.
struct Scenario {
  std::string id;
  std::string kind;  // soliton | conformal-soliton | quasi-soliton |
                     // ricci-hessian | kahler | classifier
  std::string summary;
  std::string source;  // config text the scenario was built from

  int dim = 0;          // primary chart dimension (base dimension for warped)
  geom::MetricField g;  // primary chart metric
  geom::Box box;        // sampling box for the primary chart
  std::function<double(const geom::ChartPoint&)> exclusion;
  double margin = 1e-3;

  geom::EndoField J;
  bool has_J = false;

  residuals::ConformalSolitonScenario conf;
  bool has_conf = false;
  construct::ConformalPair pair;
  bool has_pair = false;
  residuals::QuasiSolitonScenario quasi;
  bool has_quasi = false;
  skr::Profile warp_profile;  // potential as a function of the warp value
  bool has_profile = false;
  residuals::RicciHessianScenario rh;
  bool has_rh = false;
  construct::KahlerChart kahler;
  bool has_kahler = false;
  geom::ScalarField sigma;  // potential driving the divergence identities
  bool has_sigma = false;
  geom::VectorField v, w;
  bool has_v = false;
  bool has_w = false;

  std::vector<Expectation> expected;

  const Expectation* expectation_for(const std::string& checker) const;
};

// Catalog access. Scenarios are parsed from their catalog sources once and
// cached; build and catalog_source throw usage_error for unknown ids.
const std::vector<std::string>& catalog_ids();
bool has_scenario(const std::string& id);
const Scenario& build(const std::string& id);
const std::string& catalog_source(const std::string& id);

}  // namespace riccheck::gallery
