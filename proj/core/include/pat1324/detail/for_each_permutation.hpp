#ifndef PAT1324_DETAIL_FOR_EACH_PERMUTATION_HPP
#define PAT1324_DETAIL_FOR_EACH_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace pat1324 {

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> entries(static_cast<std::size_t>(n));
  std::iota(entries.begin(), entries.end(), 1);
  do {
    f(Permutation(entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

}  // namespace pat1324

#endif  // PAT1324_DETAIL_FOR_EACH_PERMUTATION_HPP
