// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kProjectorTolerance = 1e-10;

bool parse_real(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  auto r = std::from_chars(text.data(), text.data() + text.size(), out);
  return r.ec == std::errc{} && r.ptr == text.data() + text.size();
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Complex {
    throw Error(ErrorKind::Parse, "cannot read complex number '" + original + "' (expected a+bi)");
  };
  if (text.empty()) return fail();
  if (text.back() != 'i') {
    double re = 0.0;
    if (!parse_real(text, re)) return fail();
    return {re, 0.0};
  }
  text.remove_suffix(1);
  // Split at the last sign that is not the leading sign nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0;
  std::string_view imag_text = text;
  if (split != std::string_view::npos) {
    if (!parse_real(text.substr(0, split), re)) return fail();
    imag_text = text.substr(split);
  }
  double im = 0.0;
  if (imag_text.empty() || imag_text == "+") {
    im = 1.0;
  } else if (imag_text == "-") {
    im = -1.0;
  } else if (!parse_real(imag_text, im)) {
    return fail();
  }
  return {re, im};
}

std::string format_complex(Complex value) {
  std::ostringstream os;
  os.precision(12);
  os << value.real();
  if (value.imag() != 0.0) {
    if (value.imag() >= 0.0) os << '+';
    os << value.imag() << 'i';
  }
  return os.str();
}

WernerSpec::WernerSpec(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw Error(ErrorKind::NullState, "Werner coefficient list is empty");
  }
  if (!(norm_sq() > 0.0)) {
    throw Error(ErrorKind::NullState, "all Werner coefficients are zero");
  }
}

WernerSpec WernerSpec::uniform(const SystemShape& shape) {
  return WernerSpec(std::vector<Complex>(static_cast<std::size_t>(shape.local_dim()), Complex{1.0, 0.0}));
}

WernerSpec WernerSpec::parse(std::string_view text) {
  std::vector<Complex> values;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    values.push_back(parse_complex(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return WernerSpec(std::move(values));
}

double WernerSpec::norm_sq() const {
  double sum = 0.0;
  for (const auto& a : coefficients_) sum += std::norm(a);
  return sum;
}

double WernerSpec::max_weight() const {
  double best = 0.0;
  for (const auto& a : coefficients_) best = std::max(best, std::norm(a));
  return best;
}

double WernerSpec::max_cross_product() const {
  double best = 0.0;
  for (std::size_t l = 0; l < coefficients_.size(); ++l) {
    for (std::size_t k = l + 1; k < coefficients_.size(); ++k) {
      best = std::max(best, std::abs(coefficients_[l]) * std::abs(coefficients_[k]));
    }
  }
  return best;
}

int WernerSpec::nonzero_count() const {
  return static_cast<int>(std::count_if(coefficients_.begin(), coefficients_.end(),
                                        [](const Complex& a) { return a != Complex{}; }));
}

void WernerSpec::validate(const SystemShape& shape) const {
  if (coefficients_.size() != static_cast<std::size_t>(shape.local_dim())) {
    throw Error(ErrorKind::InvalidConfig, "spin " + shape.spin().to_string() + " needs " +
                                              std::to_string(shape.local_dim()) +
                                              " Werner coefficients, got " +
                                              std::to_string(coefficients_.size()));
  }
}

std::string WernerSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += format_complex(coefficients_[i]);
  }
  return out;
}

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::NotNormalized, "state vector norm is " + std::to_string(norm));
  }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::NullState, "amplitude vector is zero");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

void require_mixing(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::InvalidMixing, "mixing weight x must lie in [0,1], got " + std::to_string(x));
  }
}

MixedFamilyPoint::MixedFamilyPoint(HermitianMatrix rho_tilde, double x, SystemShape shape)
    : rho_tilde_(std::move(rho_tilde)), x_(x), shape_(shape) {
  require_mixing(x);
  if (rho_tilde_.dim() != shape_.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "projector dimension " + std::to_string(rho_tilde_.dim()) +
                                              " != D^N = " + std::to_string(shape_.dim()));
  }
  const double trace = rho_tilde_.trace();
  const double purity = rho_tilde_.entries().squaredNorm();  // Tr M^2 for Hermitian M
  if (std::abs(trace - 1.0) > kProjectorTolerance || std::abs(purity - 1.0) > kProjectorTolerance) {
    throw Error(ErrorKind::NotNormalized, "rho_tilde is not a rank-1 projector (trace " +
                                              std::to_string(trace) + ", purity " +
                                              std::to_string(purity) + ")");
  }
}

StateVector cc_state(const CCStateSpec& spec, const SystemShape& shape) {
  spec.base.validate(shape);
  if (spec.c != 1 && spec.c != -1) {
    throw Error(ErrorKind::InvalidConfig, "charge-conjugation sign must be +1 or -1, got " +
                                              std::to_string(spec.c));
  }
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  const auto i1 = static_cast<Eigen::Index>(flat_index(spec.base, shape));
  if (is_self_conjugate(spec.base)) {
    if (spec.c == -1) {
      throw Error(ErrorKind::NullState, "base " + spec.base.to_string() +
                                            " is self-conjugate, so the c=-1 combination vanishes");
    }
    amps(i1) = 1.0;
    return StateVector(std::move(amps));
  }
  const auto i2 = static_cast<Eigen::Index>(flat_index(conjugate(spec.base), shape));
  const double h = 1.0 / std::sqrt(2.0);
  amps(i1) = h;
  amps(i2) = static_cast<double>(spec.c) * h;
  return StateVector(std::move(amps));
}

StateVector werner_state(const WernerSpec& spec, const SystemShape& shape) {
  spec.validate(shape);
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  const double scale = 1.0 / std::sqrt(spec.norm_sq());
  const int d = shape.local_dim();
  // Configuration (k,k,...,k) has digit string (j,j,...,j), j = k+S.
  std::size_t repunit = 0;
  for (int s = 0; s < shape.sites(); ++s) repunit = repunit * static_cast<std::size_t>(d) + 1;
  for (int j = 0; j < d; ++j) {
    amps(static_cast<Eigen::Index>(static_cast<std::size_t>(j) * repunit)) =
        spec.coefficients()[static_cast<std::size_t>(j)] * scale;
  }
  return StateVector(std::move(amps));
}

HermitianMatrix pure_density(const StateVector& v, std::optional<SystemShape> shape) {
  const auto& a = v.amplitudes();
  return HermitianMatrix(a * a.adjoint(), std::move(shape));
}

HermitianMatrix family_density(const MixedFamilyPoint& point) {
  const double floor = (1.0 - point.x()) / static_cast<double>(point.shape().dim());
  ComplexMatrix m = point.x() * point.rho_tilde().entries();
  m.diagonal().array() += floor;
  return HermitianMatrix(std::move(m), point.shape());
}

Spectrum family_spectrum(double x, const SystemShape& shape) {
  require_mixing(x);
  const auto dim = static_cast<double>(shape.dim());
  std::vector<double> values(shape.dim(), (1.0 - x) / dim);
  values.back() = (1.0 + (dim - 1.0) * x) / dim;
  return Spectrum(std::move(values));
}

}  // namespace sepfrontier
