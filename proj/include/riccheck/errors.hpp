#pragma once

#include <stdexcept>
#include <string>

namespace riccheck {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Metric matrix not invertible (or not positive-definite where required).
struct degenerate_metric_error : error {
  explicit degenerate_metric_error(const std::string& msg) : error(msg) {}
};

// A field was evaluated outside its admissible domain (tau <= 0, ell <= 0, ...).
struct field_domain_error : error {
  explicit field_domain_error(const std::string& msg) : error(msg) {}
};

// Evaluation at an excluded singular locus (sigma = c, tau = 0, ...).
struct singularity_error : error {
  explicit singularity_error(const std::string& msg) : error(msg) {}
};

// A declared scenario precondition (wedge condition, holomorphy, ...) fails.
struct precondition_error : error {
  explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Jets of the requested order are not available for this operation.
struct jet_order_error : error {
  explicit jet_order_error(const std::string& msg) : error(msg) {}
};

// Bad CLI/config input.
struct usage_error : error {
  explicit usage_error(const std::string& msg) : error(msg) {}
};

}  // namespace riccheck
