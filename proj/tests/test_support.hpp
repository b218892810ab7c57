#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles here recompute expected values by a route separate from the
// library code they check.

#include "spinstat/braid.hpp"
#include "spinstat/covering.hpp"
#include "spinstat/phase.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline spinstat::Rational random_rational(std::mt19937_64& rng,
                                          std::int64_t max_abs_num = 120,
                                          std::int64_t max_den = 60) {
  std::uniform_int_distribution<std::int64_t> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return spinstat::Rational(num(rng), den(rng));
}

inline spinstat::Phase random_rational_phase(std::mt19937_64& rng) {
  return spinstat::Phase::from_turns(random_rational(rng));
}

inline spinstat::BraidWord random_word(std::mt19937_64& rng, int strands,
                                       std::size_t max_length) {
  std::vector<spinstat::GeneratorLetter> letters;
  if (strands >= 2) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<int> index(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t n = len(rng);
    letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      letters.push_back({index(rng), coin(rng) == 0 ? 1 : -1});
  }
  return spinstat::BraidWord(strands, std::move(letters));
}

// Independent permutation oracle: the image of i under the word is obtained
// by chasing the single value through the transpositions, innermost (last)
// letter first, without composing any permutation objects.
inline int oracle_image(const spinstat::BraidWord& w, int i) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (i == it->index)
      i = it->index + 1;
    else if (i == it->index + 1)
      i = it->index;
  }
  return i;
}

inline std::vector<int> oracle_images(const spinstat::BraidWord& w) {
  std::vector<int> images;
  for (int i = 1; i <= w.strands(); ++i) images.push_back(oracle_image(w, i));
  return images;
}

/// All permutations of {1..n} in lexicographic order.
inline std::vector<spinstat::Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<spinstat::Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline spinstat::PolarGridSpec random_grid(std::mt19937_64& rng, int m, int k) {
  std::uniform_real_distribution<double> step(0.05, 0.5);
  std::uniform_real_distribution<double> weight(0.1, 2.0);
  std::vector<double> nodes, weights;
  double r = 0.0;
  for (int i = 0; i < k; ++i) {
    r += step(rng);
    nodes.push_back(r);
    weights.push_back(weight(rng));
  }
  return spinstat::PolarGridSpec(m, std::move(nodes), std::move(weights));
}

inline spinstat::PlaneWaveFunction random_plane(std::mt19937_64& rng,
                                                const spinstat::PolarGridSpec& grid) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> samples;
  samples.reserve(grid.sample_count());
  for (std::size_t i = 0; i < grid.sample_count(); ++i)
    samples.emplace_back(gauss(rng), gauss(rng));
  return spinstat::PlaneWaveFunction(grid, std::move(samples));
}

inline spinstat::RelativeWaveFunction random_relative(
    std::mt19937_64& rng, const spinstat::PolarGridSpec& grid,
    spinstat::Phase kappa) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> samples;
  samples.reserve(grid.sample_count());
  for (std::size_t i = 0; i < grid.sample_count(); ++i)
    samples.emplace_back(gauss(rng), gauss(rng));
  return spinstat::RelativeWaveFunction(grid, std::move(kappa),
                                        std::move(samples));
}

}  // namespace testsupport
