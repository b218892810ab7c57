#include "spinstat/braid.hpp"

#include <algorithm>
#include <numeric>

namespace spinstat {

namespace {

std::string index_str(std::size_t i) { return std::to_string(i); }

}  // namespace

BraidWord::BraidWord(int strands, std::vector<GeneratorLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw InvalidStrandCount("braid word needs at least one strand, got " +
                             std::to_string(strands_));
  for (std::size_t pos = 0; pos < letters_.size(); ++pos) {
    const GeneratorLetter& l = letters_[pos];
    if (l.index < 1 || l.index > strands_ - 1)
      throw IndexOutOfRange("generator index " + std::to_string(l.index) +
                            " at position " + index_str(pos) +
                            " outside [1, " + std::to_string(strands_ - 1) +
                            "]");
    if (l.sign != 1 && l.sign != -1)
      throw BraidError("generator sign must be +1 or -1, got " +
                       std::to_string(l.sign));
  }
}

BraidWord make_braid_word(int strands,
                          const std::vector<std::pair<int, int>>& letters) {
  std::vector<GeneratorLetter> ls;
  ls.reserve(letters.size());
  for (const auto& [index, sign] : letters) ls.push_back({index, sign});
  return BraidWord(strands, std::move(ls));
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw StrandMismatch("cannot concatenate words on " +
                         std::to_string(w1.strands()) + " and " +
                         std::to_string(w2.strands()) + " strands");
  std::vector<GeneratorLetter> ls = w1.letters();
  ls.insert(ls.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), std::move(ls));
}

BraidWord operator*(const BraidWord& w1, const BraidWord& w2) {
  return compose(w1, w2);
}

BraidWord inverse(const BraidWord& w) {
  std::vector<GeneratorLetter> ls;
  ls.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    ls.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(ls));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (const GeneratorLetter& l : w.letters()) sum += l.sign;
  return sum;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<GeneratorLetter> stack;
  stack.reserve(w.length());
  for (const GeneratorLetter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord apply_relation_move(const BraidWord& w, std::size_t position,
                              RelationMove kind) {
  const auto& ls = w.letters();
  std::vector<GeneratorLetter> out = ls;
  if (kind == RelationMove::braid) {
    if (position + 3 > ls.size())
      throw MoveNotApplicable("braid move needs three letters at position " +
                              index_str(position));
    const GeneratorLetter a = ls[position];
    const GeneratorLetter b = ls[position + 1];
    const GeneratorLetter c = ls[position + 2];
    const bool matches = a.sign == b.sign && b.sign == c.sign &&
                         a.index == c.index &&
                         std::abs(a.index - b.index) == 1;
    if (!matches)
      throw MoveNotApplicable("no braid-relation pattern at position " +
                              index_str(position));
    out[position] = {b.index, a.sign};
    out[position + 1] = {a.index, a.sign};
    out[position + 2] = {b.index, a.sign};
  } else {
    if (position + 2 > ls.size())
      throw MoveNotApplicable("commutation needs two letters at position " +
                              index_str(position));
    const GeneratorLetter a = ls[position];
    const GeneratorLetter b = ls[position + 1];
    if (a.sign != b.sign || std::abs(a.index - b.index) < 2)
      throw MoveNotApplicable("no far-commutation pattern at position " +
                              index_str(position));
    out[position] = b;
    out[position + 1] = a;
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw BraidError("image sequence is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i + 1 > n)
    throw IndexOutOfRange("transposition (" + std::to_string(i) + ", " +
                          std::to_string(i + 1) + ") does not fit in S_" +
                          std::to_string(n));
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i) - 1],
            p.images_[static_cast<std::size_t>(i)]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw LengthMismatch("cannot compose permutations of sizes " +
                         std::to_string(p.size()) + " and " +
                         std::to_string(q.size()));
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i)
    images[static_cast<std::size_t>(i) - 1] = p.image(q.image(i));
  return Permutation(std::move(images));
}

Permutation underlying_permutation(const BraidWord& w) {
  // Fold p <- p . t_letter; swapping the two image entries at (index,
  // index+1) realizes composition with the transposition on the right.
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  for (const GeneratorLetter& l : w.letters()) {
    std::swap(images[static_cast<std::size_t>(l.index) - 1],
              images[static_cast<std::size_t>(l.index)]);
  }
  return Permutation(std::move(images));
}

BraidWord full_twist(int n) {
  if (n < 1)
    throw InvalidStrandCount("full twist needs at least one strand, got " +
                             std::to_string(n));
  std::vector<GeneratorLetter> ls;
  ls.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i <= n - 1; ++i) ls.push_back({i, +1});
  return BraidWord(n, std::move(ls));
}

BraidWord cluster_exchange(int n) {
  if (n < 1)
    throw InvalidStrandCount(
        "cluster exchange needs at least one particle per block, got " +
        std::to_string(n));
  std::vector<GeneratorLetter> ls;
  ls.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int i = n - k; i <= 2 * n - 1 - k; ++i) ls.push_back({i, +1});
  return BraidWord(2 * n, std::move(ls));
}

LabeledConfiguration::LabeledConfiguration(std::vector<PlanarPoint> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw BraidError("configuration points " + index_str(i + 1) + " and " +
                         index_str(j + 1) + " coincide");
}

LabeledConfiguration permute_configuration(const LabeledConfiguration& y,
                                           const Permutation& p) {
  if (y.size() != p.size())
    throw LengthMismatch("configuration of size " + std::to_string(y.size()) +
                         " cannot be permuted by S_" +
                         std::to_string(p.size()));
  std::vector<PlanarPoint> points;
  points.reserve(static_cast<std::size_t>(y.size()));
  for (int i = 1; i <= y.size(); ++i) points.push_back(y.point(p.image(i)));
  return LabeledConfiguration(std::move(points));
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const GeneratorLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p.image(i));
  }
  out += ']';
  return out;
}

}  // namespace spinstat
