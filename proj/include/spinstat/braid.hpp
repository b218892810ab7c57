#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinstat {

class BraidError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidStrandCount : public BraidError {
  using BraidError::BraidError;
};

class IndexOutOfRange : public BraidError {
  using BraidError::BraidError;
};

class StrandMismatch : public BraidError {
  using BraidError::BraidError;
};

class MoveNotApplicable : public BraidError {
  using BraidError::BraidError;
};

class LengthMismatch : public BraidError {
  using BraidError::BraidError;
};

/// One Artin generator sigma_i (sign +1) or its inverse (sign -1).
struct GeneratorLetter {
  int index;  // 1-based, valid range [1, strands-1]
  int sign;   // +1 or -1

  GeneratorLetter inverse() const { return {index, -sign}; }
  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

/// A word in the braid group B_n, stored unreduced. Reduction and
/// relation moves are explicit operations so that rewriting-invariance
/// properties can compare both forms.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<GeneratorLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<GeneratorLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<GeneratorLetter> letters_;
};

/// A bijection of {1, ..., n}; image(i) is the value i maps to.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (i, i+1) in S_n.
  static Permutation transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p . q)(i) = p(q(i)); the order matching the right action on
/// configurations, so that underlying_permutation is a homomorphism.
Permutation compose(const Permutation& p, const Permutation& q);

struct PlanarPoint {
  double x;
  double y;
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// An n-tuple of pairwise distinct labeled points in the plane.
class LabeledConfiguration {
 public:
  explicit LabeledConfiguration(std::vector<PlanarPoint> points);

  int size() const { return static_cast<int>(points_.size()); }
  const PlanarPoint& point(int i) const {
    return points_[static_cast<std::size_t>(i) - 1];
  }
  const std::vector<PlanarPoint>& points() const { return points_; }

  friend bool operator==(const LabeledConfiguration&, const LabeledConfiguration&) = default;

 private:
  std::vector<PlanarPoint> points_;
};

/// Validating constructor taking (index, sign) pairs.
BraidWord make_braid_word(int strands,
                          const std::vector<std::pair<int, int>>& letters);

/// Concatenation; requires equal strand counts.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord operator*(const BraidWord& w1, const BraidWord& w2);

/// Reversed sequence with flipped signs.
BraidWord inverse(const BraidWord& w);

/// Signed crossing count; invariant under all rewriting moves.
std::int64_t exponent_sum(const BraidWord& w);

/// Cancel adjacent letter/inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

enum class RelationMove {
  braid,        // sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j, |i-j| = 1
  far_commute,  // sigma_i sigma_j -> sigma_j sigma_i, |i-j| >= 2
};

/// Rewrite the letters at `position` by one defining relation of B_n; the
/// pattern must match with uniform sign. Length, exponent sum, and the
/// underlying permutation are unchanged.
BraidWord apply_relation_move(const BraidWord& w, std::size_t position,
                              RelationMove kind);

/// Image of w in S_n, mapping each letter to the transposition (i, i+1)
/// and composing in word order: the first letter acts outermost, so the
/// map is a homomorphism for the composition convention above.
Permutation underlying_permutation(const BraidWord& w);

/// (sigma_1 ... sigma_{n-1})^n in B_n: a 2 pi rotation of n particles.
/// Length n(n-1), trivial underlying permutation.
BraidWord full_twist(int n);

/// The positive word in B_{2n} of length n^2 exchanging the block {1..n}
/// with the block {n+1..2n}: for k = 0..n-1 append the ascending run
/// sigma_{n-k} ... sigma_{2n-1-k}.
BraidWord cluster_exchange(int n);

/// Right action of S_n on labeled configurations: point i of the result is
/// point p(i) of the input.
LabeledConfiguration permute_configuration(const LabeledConfiguration& y,
                                           const Permutation& p);

std::string to_string(const BraidWord& w);
std::string to_string(const Permutation& p);

}  // namespace spinstat
