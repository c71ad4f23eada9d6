#include "hcm/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcm/errors.hpp"

namespace hcm {

namespace {
constexpr double kValidationTol = 1e-12;
}

SplittingFunction::SplittingFunction(int k, std::vector<double> w)
    : k_(k), w_(std::move(w)) {
  if (k_ < 2) {
    throw_error(ErrorKind::InvalidInput, "hyperedge size must be at least 2");
  }
  const int r = k_ / 2;
  if (static_cast<int>(w_.size()) != r) {
    throw_error(ErrorKind::InvalidInput,
                "penalty vector must have length floor(k/2) = " + std::to_string(r));
  }
  double scale = 0.0;
  for (double v : w_) scale = std::max(scale, std::abs(v));
  const double tol = kValidationTol * std::max(1.0, scale);
  for (double v : w_) {
    if (v < -tol) {
      throw_error(ErrorKind::NegativePenalty, "penalty " + std::to_string(v) + " is negative");
    }
  }
  // First differences must be nonincreasing, and the last one nonnegative so
  // that the profile stays concave through its symmetric midpoint.
  double prev_delta = w_[0];
  for (int i = 2; i <= r; ++i) {
    const double delta = w_[i - 1] - w_[i - 2];
    if (delta > prev_delta + tol) {
      throw_error(ErrorKind::SubmodularityViolation,
                  "first differences increase at i = " + std::to_string(i));
    }
    prev_delta = delta;
  }
  if (prev_delta < -tol) {
    throw_error(ErrorKind::SubmodularityViolation,
                "penalty vector decreases toward the midpoint");
  }
  for (double& v : w_) v = std::max(v, 0.0);
}

SplittingFunction SplittingFunction::all_or_nothing(int k) {
  return SplittingFunction(k, std::vector<double>(k / 2, 1.0));
}

SplittingFunction SplittingFunction::delta_linear(int k, double delta) {
  if (delta < 1.0) {
    throw_error(ErrorKind::InvalidInput, "delta-linear requires delta >= 1");
  }
  std::vector<double> w(k / 2);
  for (int i = 1; i <= k / 2; ++i) {
    w[i - 1] = std::min(static_cast<double>(i), delta);
  }
  return SplittingFunction(k, std::move(w));
}

SplittingFunction SplittingFunction::limi(int k, double alpha_frac) {
  if (!(alpha_frac > 0.0 && alpha_frac < 1.0)) {
    throw_error(ErrorKind::InvalidInput, "limi requires 0 < alpha < 1");
  }
  const double cap = std::ceil(alpha_frac * k);
  std::vector<double> w(k / 2);
  for (int i = 1; i <= k / 2; ++i) {
    const double ratio = std::min({1.0, i / cap, (k - i) / cap});
    w[i - 1] = 0.5 + 0.5 * ratio;
  }
  return SplittingFunction(k, std::move(w));
}

SplittingFunction SplittingFunction::custom(int k, std::vector<double> penalties) {
  return SplittingFunction(k, std::move(penalties));
}

double SplittingFunction::penalty(int cut_count) const {
  const int i = std::min(cut_count, k_ - cut_count);
  if (i <= 0) return 0.0;
  return w_[i - 1];
}

double SplittingFunction::max_penalty() const {
  double m = 0.0;
  for (double v : w_) m = std::max(m, v);
  return m;
}

bool SplittingFunction::is_zero() const {
  return w_.empty() || max_penalty() == 0.0;
}

SplittingFunction SplittingSpec::instantiate(int k) const {
  switch (kind) {
    case Kind::AllOrNothing:
      return SplittingFunction::all_or_nothing(k);
    case Kind::DeltaLinear:
      return SplittingFunction::delta_linear(k, param);
    case Kind::Limi:
      return SplittingFunction::limi(k, param);
    case Kind::Custom: {
      const int r = k / 2;
      if (static_cast<int>(custom.size()) < r) {
        throw_error(ErrorKind::InvalidInput,
                    "custom penalty vector covers cardinality " +
                        std::to_string(custom.size()) + " but a hyperedge needs " +
                        std::to_string(r));
      }
      return SplittingFunction::custom(
          k, std::vector<double>(custom.begin(), custom.begin() + r));
    }
  }
  throw_error(ErrorKind::InvalidInput, "unknown splitting kind");
}

SplittingSpec SplittingSpec::parse(const std::string& text) {
  SplittingSpec spec;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "aon" || head == "all-or-nothing") {
    spec.kind = Kind::AllOrNothing;
    return spec;
  }
  if (head == "delta-linear") {
    spec.kind = Kind::DeltaLinear;
    spec.param = std::stod(tail);
    return spec;
  }
  if (head == "limi") {
    spec.kind = Kind::Limi;
    spec.param = std::stod(tail);
    return spec;
  }
  if (head == "custom") {
    spec.kind = Kind::Custom;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) spec.custom.push_back(std::stod(item));
    }
    if (spec.custom.empty()) {
      throw_error(ErrorKind::InvalidInput, "custom splitting needs at least one penalty");
    }
    return spec;
  }
  throw_error(ErrorKind::InvalidInput, "unknown splitting spec '" + text + "'");
}

std::string SplittingSpec::describe() const {
  switch (kind) {
    case Kind::AllOrNothing:
      return "aon";
    case Kind::DeltaLinear: {
      std::ostringstream os;
      os << "delta-linear:" << param;
      return os.str();
    }
    case Kind::Limi: {
      std::ostringstream os;
      os << "limi:" << param;
      return os.str();
    }
    case Kind::Custom: {
      std::ostringstream os;
      os << "custom:";
      for (size_t i = 0; i < custom.size(); ++i) {
        if (i) os << ',';
        os << custom[i];
      }
      return os.str();
    }
  }
  return "?";
}

}  // namespace hcm
