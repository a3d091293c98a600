#pragma once

#include <cstdint>
#include <vector>

namespace lap {

struct Vocabulary {
  std::vector<std::vector<double>> centers;  // k centers, each m_hat wide

  int k() const { return static_cast<int>(centers.size()); }
  int dim() const { return centers.empty() ? 0 : static_cast<int>(centers.front().size()); }

  bool operator==(const Vocabulary&) const = default;
};

struct KMeansStats {
  double initial_inertia = 0;  // after seeding, before the first update
  double final_inertia = 0;
  int iterations = 0;
  bool k_reduced = false;  // fewer descriptors than requested clusters
};

// Lloyd's algorithm with k-means++ seeding; at most 100 iterations or until
// the largest center shift drops below 1e-4. Deterministic per seed. When
// there are fewer descriptors than k, k is reduced to the descriptor count
// and the reduction is flagged; zero descriptors throw TooFewDescriptors.
Vocabulary build_vocabulary(const std::vector<std::vector<double>>& descriptors, int k,
                            std::uint64_t seed, KMeansStats* stats = nullptr);

// Nearest-center counts (Euclidean, lowest index on ties), L1-normalized.
// An empty descriptor list yields an all-zero histogram.
std::vector<double> bow_histogram(const Vocabulary& vocabulary,
                                  const std::vector<std::vector<double>>& descriptors);

}  // namespace lap
