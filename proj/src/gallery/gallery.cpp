#include "riccheck/gallery/gallery.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "riccheck/cli/config.hpp"
#include "riccheck/errors.hpp"

namespace riccheck::gallery {

namespace {

struct CatalogEntry {
  std::string id;
  std::string source;
};

// Every scenario is stored in the same config format the CLI accepts from
// files, so catalog_source() is already the serialized form.
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {

      {"gaussian_2d", R"(# shrinking Gaussian on the flat plane
[scenario]
id = gaussian_2d
kind = soliton
dim = 2
box = -1 1 -1 1
summary = flat plane with the shrinking Gaussian potential

[constants]
lambda = 1
a = 2

[metric]
g11 = 1
g22 = 1

[scalars]
f = 0.5*(x1^2 + x2^2)

[expect]
soliton = pass 1e-12
soliton_scalar = pass 1e-10
conf_soliton = pass 1e-12
lie_form = pass 1e-10
two_form = pass 1e-10
)"},

      {"gaussian_3d", R"(# shrinking Gaussian in three dimensions
[scenario]
id = gaussian_3d
kind = soliton
dim = 3
box = -1 1 -1 1 -1 1
summary = flat 3-space with the shrinking Gaussian potential

[constants]
lambda = 1
a = 3

[metric]
g11 = 1
g22 = 1
g33 = 1

[scalars]
f = 0.5*(x1^2 + x2^2 + x3^2)

[expect]
soliton = pass 1e-12
soliton_scalar = pass 1e-10
conf_soliton = pass 1e-12
lie_form = pass 1e-10
two_form = pass 1e-10
)"},

      {"gaussian_4d", R"(# expanding Gaussian in four dimensions
[scenario]
id = gaussian_4d
kind = soliton
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = flat 4-space with an expanding Gaussian potential

[constants]
lambda = -0.5
a = -2

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[scalars]
f = -0.25*(x1^2 + x2^2 + x3^2 + x4^2)

[expect]
soliton = pass 1e-12
soliton_scalar = pass 1e-10
)"},

      {"cigar_2d", R"(# steady rotationally symmetric soliton on the plane
[scenario]
id = cigar_2d
kind = soliton
dim = 2
box = -1.5 1.5 -1.5 1.5
summary = steady cigar metric with its log potential

[constants]
lambda = 0
a = -4

[metric]
g11 = 1/(1 + x1^2 + x2^2)
g22 = 1/(1 + x1^2 + x2^2)

[scalars]
f = -log(1 + x1^2 + x2^2)

[expect]
soliton = pass 1e-9
soliton_scalar = pass 1e-8
)"},

      {"cigar_wrong_lambda", R"(# cigar data paired with the wrong soliton constant
[scenario]
id = cigar_wrong_lambda
kind = soliton
dim = 2
box = -1.5 1.5 -1.5 1.5
summary = cigar metric mislabeled as shrinking; the tensor equation must fail

[constants]
lambda = 1

[metric]
g11 = 1/(1 + x1^2 + x2^2)
g22 = 1/(1 + x1^2 + x2^2)

[scalars]
f = -log(1 + x1^2 + x2^2)

[expect]
soliton = fail 1e-2
)"},

      {"sphere_chart", R"(# round sphere in a stereographic chart
[scenario]
id = sphere_chart
kind = soliton
dim = 2
box = -1 1 -1 1
summary = unit round sphere as an Einstein (trivial-potential) soliton

[constants]
lambda = 1
a = 0

[metric]
g11 = 4/(1 + x1^2 + x2^2)^2
g22 = 4/(1 + x1^2 + x2^2)^2

[expect]
soliton = pass 1e-10
soliton_scalar = pass 1e-10
)"},

      {"hyperbolic_halfplane", R"(# hyperbolic plane in the upper half-plane chart
[scenario]
id = hyperbolic_halfplane
kind = soliton
dim = 2
box = -1 1 0.5 2
summary = hyperbolic plane as an Einstein (trivial-potential) soliton

[constants]
lambda = -1
a = 0

[metric]
g11 = 1/x2^2
g22 = 1/x2^2

[expect]
soliton = pass 1e-10
soliton_scalar = pass 1e-10
)"},

      {"sphere_conformal_to_flat", R"(# sphere chart rescaled to the flat plane
[scenario]
id = sphere_conformal_to_flat
kind = conformal-soliton
dim = 2
box = -1 1 -1 1
summary = conformal factor carrying the sphere chart to the flat steady soliton

[constants]
lambda = 0
a = 0

[metric]
g11 = 4/(1 + x1^2 + x2^2)^2
g22 = 4/(1 + x1^2 + x2^2)^2

[scalars]
tau = 2/(1 + x1^2 + x2^2)

[expect]
conf_soliton = pass 1e-8
conf_scalar = pass 1e-9
lie_form = pass 1e-10
two_form = pass 1e-10
conf_transport = pass 1e-8
conformal_formulas = pass 1e-8
)"},

      {"flat_to_hyperbolic", R"(# flat metric rescaled to the hyperbolic half-plane
[scenario]
id = flat_to_hyperbolic
kind = conformal-soliton
dim = 2
box = -1 1 0.5 2
summary = conformal factor carrying the flat half-plane to the hyperbolic metric

[constants]
lambda = -1
a = 0

[metric]
g11 = 1
g22 = 1

[scalars]
tau = x2

[expect]
conf_soliton = pass 1e-8
conf_transport = pass 1e-8
conformal_formulas = pass 1e-8
)"},

      {"flat_to_sphere", R"(# flat metric rescaled to the sphere chart
[scenario]
id = flat_to_sphere
kind = conformal-soliton
dim = 2
box = -1 1 -1 1
summary = conformal factor carrying the flat plane to the round sphere chart

[constants]
lambda = 1
a = 0

[metric]
g11 = 1
g22 = 1

[scalars]
tau = (1 + x1^2 + x2^2)/2

[expect]
conf_soliton = pass 1e-8
conf_transport = pass 1e-8
conformal_formulas = pass 1e-8
)"},

      {"conformal_offshell", R"(# generic data: transport identities hold, the equation does not
[scenario]
id = conformal_offshell
kind = conformal-soliton
dim = 3
box = -0.7 0.7 -0.7 0.7 -0.7 0.7
summary = bumpy metric and unrelated factor; identities pass, the equation fails

[constants]
lambda = 0.7

[metric]
g11 = 1 + 0.2*sin(x2)
g22 = 1 + 0.1*exp(0.3*x1)
g33 = 1 + 0.15*cosh(0.2*(x1 + x3))
g12 = 0.05*x3
g23 = 0.04*sin(x1 + x2)

[scalars]
tau = 1 + 0.3*exp(0.2*x1) + 0.1*sin(x2)
f = 0.4*x1*x3 + 0.2*cos(x2)

[expect]
lie_form = pass 1e-10
two_form = pass 1e-10
conf_transport = pass 1e-8
conformal_formulas = pass 1e-8
conf_soliton = fail 1e-2
)"},

      {"hyperbolic_warped_k2", R"(# hyperbolic 3-space as a warped product over a line
[scenario]
id = hyperbolic_warped_k2
kind = quasi-soliton
dim = 1
box = -0.8 0.8
summary = exponential warping of a flat plane fiber giving hyperbolic 3-space

[constants]
lambda = -2
nu = 0

[warped]
base_dim = 1
fiber_dim = 2
b11 = 1
f11 = 1
f22 = 1
ell = exp(x1)
fiber_box = -1 1 -1 1

[scalars]
profile = 0

[expect]
quasi_soliton = pass 1e-8
special_qs = pass 1e-8
warped_blocks = pass 1e-7
)"},

      {"hyperbolic_warped_k3", R"(# hyperbolic 4-space as a warped product over a line
[scenario]
id = hyperbolic_warped_k3
kind = quasi-soliton
dim = 1
box = -0.8 0.8
summary = exponential warping of a flat 3-space fiber giving hyperbolic 4-space

[constants]
lambda = -3
nu = 0

[warped]
base_dim = 1
fiber_dim = 3
b11 = 1
f11 = 1
f22 = 1
f33 = 1
ell = exp(x1)
fiber_box = -1 1 -1 1 -1 1

[scalars]
profile = 0

[expect]
quasi_soliton = pass 1e-8
special_qs = pass 1e-8
warped_blocks = pass 1e-7
)"},

      {"cigar_warped", R"(# cigar soliton in polar form as a warped product
[scenario]
id = cigar_warped
kind = quasi-soliton
dim = 1
box = 0.10033534773107558 1.4722194895832204
summary = cigar in polar coordinates; the warp profile drives the potential

[constants]
lambda = 0
nu = 0

[warped]
base_dim = 1
fiber_dim = 1
b11 = 1
f11 = 1
ell = tanh(x1)
fiber_box = -1 1

[scalars]
f = -2*log(cosh(x1))
profile = log(1 - s^2)

[expect]
quasi_soliton = pass 1e-8
special_qs = pass 1e-8
warped_blocks = pass 1e-7
)"},

      {"warped_wrong_nu", R"(# hyperbolic warping with a wrong fiber constant
[scenario]
id = warped_wrong_nu
kind = quasi-soliton
dim = 1
box = -0.8 0.8
summary = flat fiber mislabeled with a positive fiber constant; must fail

[constants]
lambda = -2
nu = 1

[warped]
base_dim = 1
fiber_dim = 2
b11 = 1
f11 = 1
f22 = 1
ell = exp(x1)
fiber_box = -1 1 -1 1

[expect]
quasi_soliton = fail 1e-2
)"},

      {"ell_one_product", R"(# trivial warping: a genuine product of a soliton and an Einstein fiber
[scenario]
id = ell_one_product
kind = quasi-soliton
dim = 2
box = -1 1 -1 1
summary = unit warp over the Gaussian base with a round sphere fiber

[constants]
lambda = 1
nu = 1

[warped]
base_dim = 2
fiber_dim = 2
b11 = 1
b22 = 1
f11 = 4/(1 + x1^2 + x2^2)^2
f22 = 4/(1 + x1^2 + x2^2)^2
ell = 1
fiber_box = -1 1 -1 1

[scalars]
f = 0.5*(x1^2 + x2^2)

[expect]
quasi_soliton = pass 1e-10
warped_blocks = pass 1e-7
)"},

      {"flat_rh_m2", R"(# radial Ricci-Hessian data on flat 4-space
[scenario]
id = flat_rh_m2
kind = ricci-hessian
dim = 4
box = -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = radial coefficient functions satisfying the equation exactly

[constants]
lambda = 0

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[scalars]
sigma = x1^2 + x2^2 + x3^2 + x4^2
alpha = x1^2 + x2^2 + x3^2 + x4^2
gamma = 2*(x1^2 + x2^2 + x3^2 + x4^2)
mu = x1^2 + x2^2 + x3^2 + x4^2

[expect]
ricci_hessian = pass 1e-11
rels_wedge = pass 1e-10
prop_dy = pass 1e-9
)"},

      {"flat_rh_m3", R"(# radial Ricci-Hessian data on flat 6-space
[scenario]
id = flat_rh_m3
kind = ricci-hessian
dim = 6
box = -1 1 -1 1 -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2
margin = 0.05
summary = radial coefficient functions in six dimensions

[constants]
lambda = 0

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1
g55 = 1
g66 = 1

[scalars]
sigma = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2
alpha = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2
gamma = 2*(x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2)
mu = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2

[expect]
ricci_hessian = pass 1e-11
rels_wedge = pass 1e-10
prop_dy = pass 1e-9
)"},

      {"flat_rh_wrong_gamma", R"(# radial data with a mismatched coefficient
[scenario]
id = flat_rh_wrong_gamma
kind = ricci-hessian
dim = 4
box = -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = the metric coefficient is off by a factor; the equation must fail

[constants]
lambda = 0

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[scalars]
sigma = x1^2 + x2^2 + x3^2 + x4^2
alpha = x1^2 + x2^2 + x3^2 + x4^2
gamma = x1^2 + x2^2 + x3^2 + x4^2

[expect]
ricci_hessian = fail 1e-2
)"},

      {"rh_exponential_3d", R"(# coefficient identity on an exponentially warped chart
[scenario]
id = rh_exponential_3d
kind = ricci-hessian
dim = 3
box = -1 1 -1 1 -1 1
summary = closed-form check of the coefficient identity on a curved chart

[constants]
lambda = 0.6

[metric]
g11 = 1
g22 = exp(2*x1)
g33 = exp(2*x1)

[scalars]
sigma = x1
alpha = cos(x1)
mu = 0.3*x1 + 0.1*x1^2
gamma = 0.6*exp(-2*(0.3*x1 + 0.1*x1^2)) - 2*(0.3 + 0.2*x1) + (cos(x1)*(0.3 + 0.2*x1) - 0.2)

[expect]
gamma_formula = pass 1e-9
)"},

      {"flat_kahler_m2", R"(# flat complex 2-space from its quadratic potential
[scenario]
id = flat_kahler_m2
kind = kahler
dim = 4
box = -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = quadratic potential chart; structure invariants and the trace identity

[kahler]
m = 2
potential = x1^2 + x2^2 + x3^2 + x4^2

[scalars]
sigma = x1^2 + x2^2 + x3^2 + x4^2

[expect]
kahler_invariants = pass 1e-9
prop_dy = pass 1e-9
)"},

      {"flat_kahler_m3", R"(# flat complex 3-space from its quadratic potential
[scenario]
id = flat_kahler_m3
kind = kahler
dim = 6
box = -1 1 -1 1 -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2
margin = 0.05
summary = quadratic potential chart in complex dimension three

[kahler]
m = 3
potential = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2

[scalars]
sigma = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2

[expect]
kahler_invariants = pass 1e-9
prop_dy = pass 1e-9
)"},

      {"fubini_study_m2", R"(# projective plane chart from its log potential
[scenario]
id = fubini_study_m2
kind = kahler
dim = 4
box = -0.6 0.6 -0.6 0.6 -0.6 0.6 -0.6 0.6
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = log potential chart; Einstein with trivial potential

[constants]
lambda = 6

[kahler]
m = 2
potential = log(1 + x1^2 + x2^2 + x3^2 + x4^2)

[scalars]
sigma = (x1^2 + x2^2 + x3^2 + x4^2)/(1 + x1^2 + x2^2 + x3^2 + x4^2)

[expect]
kahler_invariants = pass 1e-9
prop_dy = pass 1e-7
soliton = pass 1e-7
)"},

      {"fubini_study_m3", R"(# projective 3-space chart from its log potential
[scenario]
id = fubini_study_m3
kind = kahler
dim = 6
box = -0.6 0.6 -0.6 0.6 -0.6 0.6 -0.6 0.6 -0.6 0.6 -0.6 0.6
exclusion = x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2
margin = 0.05
summary = log potential chart in complex dimension three

[constants]
lambda = 8

[kahler]
m = 3
potential = log(1 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2)

[expect]
kahler_invariants = pass 1e-9
soliton = pass 1e-7
)"},

      {"perturbed_kahler_m2", R"(# perturbed potential: a valid chart that is not Einstein
[scenario]
id = perturbed_kahler_m2
kind = kahler
dim = 4
box = -0.8 0.8 -0.8 0.8 -0.8 0.8 -0.8 0.8
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = quartic perturbation keeps the chart honest but breaks the equation

[constants]
lambda = 0

[kahler]
m = 2
potential = x1^2 + x2^2 + x3^2 + x4^2 + 0.1*(x1^2 + x2^2 + x3^2 + x4^2)^2

[expect]
kahler_invariants = pass 1e-9
soliton = fail 1e-3
)"},

      {"kahler_invariance_control", R"(# compatibility control: parallel structure, incompatible metric
[scenario]
id = kahler_invariance_control
kind = kahler
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = constant metric that the constant structure does not preserve

[metric]
g11 = 1
g22 = 2
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[expect]
kahler_invariants = fail 0.1
)"},

      {"gaussian_kahler_m2", R"(# Gaussian soliton on the flat potential chart
[scenario]
id = gaussian_kahler_m2
kind = kahler
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = shrinking Gaussian on a potential chart, with the Euler field

[constants]
lambda = 1

[kahler]
m = 2
potential = x1^2 + x2^2 + x3^2 + x4^2

[scalars]
f = 0.5*(x1^2 + x2^2 + x3^2 + x4^2)

[fields]
w = x1, x2, x3, x4

[expect]
hermitian = pass 1e-9
soliton = pass 1e-12
holomorphy = pass 1e-12
conformal_field = pass 1e-10
killing = fail 1.0
)"},

      {"hermitian_control", R"(# anisotropic factor whose Hessian is not invariant
[scenario]
id = hermitian_control
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = one-direction factor; its Hessian fails invariance under the structure

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[scalars]
tau = exp(0.3*x1)

[expect]
hermitian = fail 0.05
)"},

      {"rotation_killing", R"(# simultaneous rotation in both coordinate planes
[scenario]
id = rotation_killing
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = rotation field: isometric, holomorphic, commuting with the structure

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[fields]
v = -x2, x1, -x4, x3

[expect]
killing = pass 1e-12
conformal_field = pass 1e-12
commutator_inv = pass 1e-12
holomorphy = pass 1e-12
)"},

      {"euler_conformal", R"(# radial scaling field
[scenario]
id = euler_conformal
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = scaling field: conformal and holomorphic but not isometric

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[fields]
v = x1, x2, x3, x4

[expect]
killing = fail 1.0
conformal_field = pass 1e-12
commutator_inv = pass 1e-12
holomorphy = pass 1e-12
)"},

      {"shear_control", R"(# shear field: neither isometric nor conformal
[scenario]
id = shear_control
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2
margin = 0.02
summary = quadratic shear breaking both classifier identities

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[fields]
v = x1*x2, 0, 0, 0

[expect]
killing = fail 1e-2
conformal_field = fail 1e-2
)"},

      {"product_surface_killing", R"(# product of a flat surface and a rotationally symmetric one
[scenario]
id = product_surface_killing
kind = classifier
dim = 4
box = -1 1 -1 1 0.3 1.2 -1 1
summary = angular field on a curved product surface: isometric and holomorphic

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = (2 + sin(x3))^2

[endo]
j12 = -1
j21 = 1
j34 = -(2 + sin(x3))
j43 = 1/(2 + sin(x3))

[fields]
w = 0, 0, 0, 1

[expect]
killing = pass 1e-8
conformal_field = pass 1e-8
commutator_inv = pass 1e-8
holomorphy = pass 1e-8
)"},

      {"span_aligned", R"(# second field inside the invariant plane of the first
[scenario]
id = span_aligned
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
exclusion = x1^2 + x2^2 + x3^2 + x4^2
margin = 0.05
summary = the second field is a combination of the first and its rotation

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[fields]
v = x1, x2, x3, x4
w = 2*x1 - x2, 2*x2 + x1, 2*x3 - x4, 2*x4 + x3

[expect]
span_alignment = pass 1e-10
)"},

      {"span_orthogonal", R"(# second field orthogonal to the invariant plane of the first
[scenario]
id = span_orthogonal
kind = classifier
dim = 4
box = -1 1 -1 1 -1 1 -1 1
summary = constant fields spanning orthogonal invariant planes

[metric]
g11 = 1
g22 = 1
g33 = 1
g44 = 1

[endo]
j12 = -1
j21 = 1
j34 = -1
j43 = 1

[fields]
v = 1, 0, 0, 0
w = 0, 0, 1, 0

[expect]
span_alignment = fail 0.1
)"},
  };
  return entries;
}

std::mutex cache_mutex;
std::map<std::string, Scenario>& cache() {
  static std::map<std::string, Scenario> c;
  return c;
}

}  // namespace

const Expectation* Scenario::expectation_for(const std::string& checker) const {
  for (const auto& e : expected)
    if (e.checker == checker) return &e;
  return nullptr;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    out.reserve(catalog().size());
    for (const auto& e : catalog()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool has_scenario(const std::string& id) {
  for (const auto& e : catalog())
    if (id == e.id) return true;
  return false;
}

const std::string& catalog_source(const std::string& id) {
  for (const auto& e : catalog())
    if (id == e.id) return e.source;
  throw usage_error("unknown scenario: " + id);
}

const Scenario& build(const std::string& id) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache().find(id);
  if (it != cache().end()) return it->second;
  for (const auto& e : catalog()) {
    if (id == e.id) {
      Scenario s = cli::parse_scenario_text(e.source, e.id);
      return cache().emplace(id, std::move(s)).first->second;
    }
  }
  throw usage_error("unknown scenario: " + id);
}

}  // namespace riccheck::gallery
