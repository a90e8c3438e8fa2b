#ifndef MORSERES_TEST_HELPERS_HPP
#define MORSERES_TEST_HELPERS_HPP

#include <string>

#include "morseres/document.hpp"
#include "morseres/ideal.hpp"

#ifndef MORSERES_FIXTURE_DIR
#define MORSERES_FIXTURE_DIR "fixtures"
#endif

namespace test {

inline morseres::Ideal fixture(const std::string& name) {
  return morseres::read_document_file(std::string(MORSERES_FIXTURE_DIR) + "/" +
                                      name + ".json")
      .build();
}

inline morseres::Subset S(std::initializer_list<int> members) {
  morseres::Subset t = 0;
  for (int j : members) t |= morseres::Subset(1) << (j - 1);
  return t;
}

}  // namespace test

#endif
