#pragma once

#include <array>
#include <vector>

namespace lap {

inline constexpr int kSurfDescriptorDim = 64;

struct PcaModel {
  std::vector<double> mean;         // dim
  std::vector<double> eigenvalues;  // descending, >= 0
  std::vector<double> rotation;     // dim x dim, row-major; rows are components
  int dim = 0;
  int m_hat = 0;    // retained dimension
  double alpha = 0.95;

  bool operator==(const PcaModel&) const = default;
};

// Smallest m minimizing |alpha * sum(lambda) - sum_{i<=m} lambda_i| for
// eigenvalues sorted descending.
int select_m_hat(const std::vector<double>& eigenvalues, double alpha);

// Mean-centered covariance eigendecomposition over the descriptors.
// Requires more samples than dimensions (DegenerateCovariance otherwise).
PcaModel fit_pca(const std::vector<std::array<double, kSurfDescriptorDim>>& descriptors,
                 double alpha);

// (d - mean) projected onto the first m_hat rotation rows.
std::vector<double> pca_reduce(const PcaModel& pca,
                               const std::array<double, kSurfDescriptorDim>& d);

}  // namespace lap
