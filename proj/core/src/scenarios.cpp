#include "pbr/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "pbr/errors.hpp"

namespace pbr {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::string device_name(DeviceState s) { return s == DeviceState::Zero ? "0" : "+"; }

std::vector<std::string> outcome_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < count; ++k) labels.push_back("xi" + std::to_string(k + 1));
  return labels;
}

}  // namespace

ComplexVector ket(KetLabel label) {
  switch (label) {
    case KetLabel::Zero:
      return {1.0, 0.0};
    case KetLabel::One:
      return {0.0, 1.0};
    case KetLabel::Plus:
      return {kInvSqrt2, kInvSqrt2};
    case KetLabel::Minus:
      return {kInvSqrt2, -kInvSqrt2};
  }
  throw DomainError("unknown ket label");
}

std::array<PreparationLabel, 4> all_preparations() {
  using enum DeviceState;
  return {{{Zero, Zero}, {Zero, Plus}, {Plus, Zero}, {Plus, Plus}}};
}

std::size_t preparation_index(PreparationLabel label) {
  return (label.device1 == DeviceState::Plus ? 2 : 0) +
         (label.device2 == DeviceState::Plus ? 1 : 0);
}

std::string to_string(PreparationLabel label) {
  return "|" + device_name(label.device1) + device_name(label.device2) + ">";
}

ComplexVector device_ket(DeviceState state) {
  return ket(state == DeviceState::Zero ? KetLabel::Zero : KetLabel::Plus);
}

ComplexVector product_preparation(PreparationLabel label) {
  return tensor(device_ket(label.device1), device_ket(label.device2));
}

MeasurementBasis xi_basis() {
  const auto k0 = ket(KetLabel::Zero);
  const auto k1 = ket(KetLabel::One);
  const auto plus = ket(KetLabel::Plus);
  const auto minus = ket(KetLabel::Minus);
  const Amplitude s{kInvSqrt2, 0.0};
  return MeasurementBasis::checked({
      s * (tensor(k0, k1) + tensor(k1, k0)),
      s * (tensor(k0, minus) + tensor(k1, plus)),
      s * (tensor(plus, k1) + tensor(minus, k0)),
      s * (tensor(plus, minus) + tensor(minus, plus)),
  });
}

std::array<ZeroPairingEntry, 4> xi_zero_pairing() {
  const auto preps = all_preparations();
  return {{{preps[0], 0}, {preps[1], 1}, {preps[2], 2}, {preps[3], 3}}};
}

ProbabilityTable::ProbabilityTable(std::vector<std::string> row_labels,
                                   std::vector<std::string> column_labels,
                                   std::vector<double> values,
                                   double zero_threshold)
    : row_labels_(std::move(row_labels)),
      column_labels_(std::move(column_labels)),
      values_(std::move(values)),
      zero_threshold_(zero_threshold) {
  if (values_.size() != rows() * columns()) {
    throw DimensionError("table values do not match its shape");
  }
  if (!(zero_threshold_ >= 0.0) || !std::isfinite(zero_threshold_)) {
    throw DomainError("zero threshold must be finite and non-negative");
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    for (double v : row(r)) {
      if (!std::isfinite(v)) throw NonFiniteError("table entry is not finite");
      if (v < -tol::kProb) throw DomainError("negative table entry");
    }
    if (std::abs(row_sum(r) - 1.0) > tol::kProb) {
      throw DomainError("row '" + row_labels_[r] + "' does not sum to 1");
    }
  }
}

double ProbabilityTable::at(std::size_t row, std::size_t column) const {
  return values_.at(row * columns() + column);
}

bool ProbabilityTable::is_zero(std::size_t row, std::size_t column) const {
  return at(row, column) <= zero_threshold_;
}

std::span<const double> ProbabilityTable::row(std::size_t r) const {
  return std::span<const double>(values_).subspan(r * columns(), columns());
}

double ProbabilityTable::row_sum(std::size_t r) const {
  const auto cells = row(r);
  return std::accumulate(cells.begin(), cells.end(), 0.0);
}

std::size_t ProbabilityTable::zero_count() const noexcept {
  std::size_t n = 0;
  for (double v : values_) n += v <= zero_threshold_ ? 1 : 0;
  return n;
}

ProbabilityTable ProbabilityTable::with_zero_threshold(double threshold) const {
  return ProbabilityTable(row_labels_, column_labels_, values_, threshold);
}

std::vector<std::string> xi_labels() { return outcome_labels(4); }

ProbabilityTable product_table(std::span<const ComplexVector> device_states,
                               std::span<const std::string> device_names,
                               const MeasurementBasis& basis) {
  if (device_states.size() != device_names.size()) {
    throw DimensionError("one name per device state is required");
  }
  std::vector<std::string> rows;
  std::vector<double> values;
  for (std::size_t i = 0; i < device_states.size(); ++i) {
    for (std::size_t j = 0; j < device_states.size(); ++j) {
      rows.push_back("|" + device_names[i] + device_names[j] + ">");
      const auto dist = born_distribution(tensor(device_states[i], device_states[j]), basis);
      values.insert(values.end(), dist.probabilities().begin(), dist.probabilities().end());
    }
  }
  return ProbabilityTable(std::move(rows), outcome_labels(basis.size()), std::move(values));
}

ProbabilityTable zero_outcome_table() {
  const std::array states{device_ket(DeviceState::Zero), device_ket(DeviceState::Plus)};
  const std::array<std::string, 2> names{"0", "+"};
  return product_table(states, names, xi_basis());
}

bool matches_zero_pairing(const ProbabilityTable& table) {
  if (table.rows() != 4 || table.columns() != 4) return false;
  bool expected[4][4] = {};
  for (const auto& entry : xi_zero_pairing()) {
    expected[preparation_index(entry.preparation)][entry.outcome] = true;
  }
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (table.is_zero(r, c) != expected[r][c]) return false;
    }
  }
  return true;
}

ThetaPair theta_pair(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw DomainError("theta must lie in the open interval (0, pi)");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ThetaPair{theta, ComplexVector{c, s}, ComplexVector{c, -s}};
}

ProbabilityTable theta_table(const ThetaPair& pair) {
  const std::array states{pair.psi0, pair.psi1};
  const std::array<std::string, 2> names{"psi0", "psi1"};
  return product_table(states, names, xi_basis());
}

namespace {
ComplexVector mz_unnormalized() { return ket(KetLabel::Zero) + ket(KetLabel::Plus); }
}  // namespace

double mz_normalization_squared() { return 1.0 / mz_unnormalized().norm_squared(); }

ComplexVector mz_preparation_state() { return normalize(mz_unnormalized()); }

ComplexVector mz_joint_state() {
  const auto psi = mz_preparation_state();
  return tensor(psi, psi);
}

ProbabilityTable compatibility_report(const ComplexVector& state,
                                      const MeasurementBasis& basis,
                                      std::string row_label) {
  const auto dist = born_distribution(state, basis);
  return ProbabilityTable({std::move(row_label)}, outcome_labels(basis.size()),
                          {dist.probabilities().begin(), dist.probabilities().end()});
}

}  // namespace pbr
