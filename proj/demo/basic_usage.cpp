// Counts anagrams of 111222333 with no letter in place, checks the parity
// rule, and draws one labeled derangement.

#include <iostream>

#include "gdkit/gdkit.hpp"

int main() {
  gdkit::MemoStore memo;
  gdkit::BlockSizes blocks{3, 3, 3};

  auto afl = gdkit::count_unlabeled(blocks, memo);
  auto gd = gdkit::count_labeled(blocks, memo);
  std::cout << "P'(3,3,3) = " << afl << "\n";
  std::cout << "P(3,3,3)  = " << gd << "\n";
  std::cout << "closed form agrees: " << (gdkit::count_three_closed(3, 3, 3) == afl) << "\n";
  std::cout << "odd by binary digits: " << gdkit::parity_unlabeled(blocks).odd << ", actually odd: " << afl.is_odd()
            << "\n";

  auto sample = gdkit::construct_gd_pairing(blocks);
  std::cout << "a derangement projects to " << gdkit::word_str(gdkit::project_to_afl(sample)) << "\n";
  auto stats = memo.stats();
  std::cout << "memo entries: " << stats.entries() << "\n";
}
