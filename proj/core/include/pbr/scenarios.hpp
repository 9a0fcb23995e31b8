#pragma once

// States, measurement and probability tables of the two-device preparation
// experiment: the four product preparations measured in the entangled
// four-outcome basis, the θ-parameterized pair, and the recombined
// Mach-Zehnder preparation N(|0> + |+>).

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pbr/quantum.hpp"
#include "pbr/tolerances.hpp"

namespace pbr {

enum class KetLabel { Zero, One, Plus, Minus };

/// Single-qubit ket. |±> = (|0> ± |1>)/√2.
ComplexVector ket(KetLabel label);

/// What a single preparation device emits in the distinguishable setup.
enum class DeviceState { Zero, Plus };

struct PreparationLabel {
  DeviceState device1;
  DeviceState device2;

  friend bool operator==(const PreparationLabel&, const PreparationLabel&) = default;
};

/// The four labels in table order: |00>, |0+>, |+0>, |++>.
std::array<PreparationLabel, 4> all_preparations();

/// Row index of a label within all_preparations().
std::size_t preparation_index(PreparationLabel label);

std::string to_string(PreparationLabel label);

ComplexVector device_ket(DeviceState state);

/// device_ket(device1) ⊗ device_ket(device2).
ComplexVector product_preparation(PreparationLabel label);

/// The entangled measurement {ξ1, ξ2, ξ3, ξ4}:
///   ξ1 = (|0>|1> + |1>|0>)/√2    ξ2 = (|0>|−> + |1>|+>)/√2
///   ξ3 = (|+>|1> + |−>|0>)/√2    ξ4 = (|+>|−> + |−>|+>)/√2
MeasurementBasis xi_basis();

/// Preparation whose outcome is forbidden. Preparation i of
/// all_preparations() never yields outcome ξ(i+1).
struct ZeroPairingEntry {
  PreparationLabel preparation;
  std::size_t outcome;
};

std::array<ZeroPairingEntry, 4> xi_zero_pairing();

/// Preparation-by-outcome probability matrix with zero flags.
///
/// An entry is flagged zero when it is ≤ zero_threshold. The stored values
/// are never clipped; renderers print flagged cells as exact 0.
class ProbabilityTable {
 public:
  ProbabilityTable(std::vector<std::string> row_labels,
                   std::vector<std::string> column_labels,
                   std::vector<double> values,
                   double zero_threshold = tol::kProb);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t columns() const noexcept { return column_labels_.size(); }
  std::span<const std::string> row_labels() const noexcept { return row_labels_; }
  std::span<const std::string> column_labels() const noexcept { return column_labels_; }
  std::span<const double> values() const noexcept { return values_; }
  double zero_threshold() const noexcept { return zero_threshold_; }

  double at(std::size_t row, std::size_t column) const;
  bool is_zero(std::size_t row, std::size_t column) const;
  std::span<const double> row(std::size_t r) const;
  double row_sum(std::size_t r) const;

  std::size_t zero_count() const noexcept;
  /// No zero flag anywhere in the table.
  bool compatible() const noexcept { return zero_count() == 0; }

  /// Same values with a different zero-flag threshold.
  ProbabilityTable with_zero_threshold(double threshold) const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> column_labels_;
  std::vector<double> values_;
  double zero_threshold_;
};

std::vector<std::string> xi_labels();

/// Born table of every ordered pair of device states (row = device1 index ×
/// count + device2 index) against the basis.
ProbabilityTable product_table(std::span<const ComplexVector> device_states,
                               std::span<const std::string> device_names,
                               const MeasurementBasis& basis);

/// 4×4 table of the four product preparations against the ξ basis.
ProbabilityTable zero_outcome_table();

/// True iff the flagged cells of a 4×4 ξ table are exactly the pairing.
bool matches_zero_pairing(const ProbabilityTable& table);

struct ThetaPair {
  double theta;
  ComplexVector psi0;  // cos(θ/2)|0> + sin(θ/2)|1>
  ComplexVector psi1;  // cos(θ/2)|0> − sin(θ/2)|1>
};

/// Throws DomainError unless 0 < theta < π.
ThetaPair theta_pair(double theta);

/// Product table of {psi0, psi1} against the ξ basis. No zero pattern is
/// implied for general θ.
ProbabilityTable theta_table(const ThetaPair& pair);

/// N² for N(|0> + |+>), computed from the unnormalized vector.
double mz_normalization_squared();

/// Output of one recombining Mach-Zehnder device, N(|0> + |+>).
ComplexVector mz_preparation_state();

/// ψ ⊗ ψ for two independent Mach-Zehnder devices.
ComplexVector mz_joint_state();

/// Single-row Born table of state against basis; compatible() tells whether
/// every outcome can occur.
ProbabilityTable compatibility_report(const ComplexVector& state,
                                      const MeasurementBasis& basis,
                                      std::string row_label = "state");

}  // namespace pbr
