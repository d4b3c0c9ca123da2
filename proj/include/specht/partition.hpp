#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace specht {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Parses the text syntax "3,2,1".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  /// Lexicographic on parts, for use as a container key.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;

 private:
  std::vector<int> parts_;
  int n_;
};

/// All partitions of n, each once, lexicographically decreasing:
/// (n) first, (1,...,1) last.
std::vector<Partition> enumerate_partitions(int n);

/// #SYT(shape) by the hook length formula: n! / prod(hooks).
mpz_class count_syt_hook(const Partition& shape);

}  // namespace specht
