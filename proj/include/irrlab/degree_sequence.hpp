#ifndef IRRLAB_DEGREE_SEQUENCE_HPP
#define IRRLAB_DEGREE_SEQUENCE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "irrlab/errors.hpp"

namespace irrlab {

// A non-increasing sequence of vertex degrees. Entries must lie in [0, n-1];
// being graphical is not required here (see is_graphical in degseq.hpp).
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> non_increasing) : d_(std::move(non_increasing)) {
    const int n = order();
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] < 0 || d_[i] > n - 1)
        throw Error(errc::invalid_degree,
                    "entry " + std::to_string(d_[i]) + " outside [0, " + std::to_string(n - 1) + "]");
      if (i > 0 && d_[i] > d_[i - 1])
        throw Error(errc::not_sorted, "degree sequence must be non-increasing");
    }
  }

  static DegreeSequence sorted_from(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    return DegreeSequence(std::move(degrees));
  }

  int order() const { return static_cast<int>(d_.size()); }
  const std::vector<int>& values() const { return d_; }
  std::int64_t sum() const { return std::accumulate(d_.begin(), d_.end(), std::int64_t{0}); }

  // Lexicographic order, so sequence sets sort the same way they enumerate.
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> d_;
};

}  // namespace irrlab

#endif  // IRRLAB_DEGREE_SEQUENCE_HPP
