#include <doctest.h>

#include <algorithm>

#include "boost_entropy/verification.hpp"

using namespace boost_entropy::verification;

namespace {

const CheckResult& find(const std::vector<CheckResult>& results, const std::string& name) {
  const auto it = std::find_if(results.begin(), results.end(),
                               [&](const CheckResult& r) { return r.name == name; });
  REQUIRE(it != results.end());
  return *it;
}

}  // namespace

TEST_CASE("fresh build passes every check") {
  const auto results = run_verification();
  CHECK(results.size() == 17);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
  for (const char* prefix : {"core/", "quad/", "relativistic/", "galilean/", "compare/"}) {
    CHECK(std::any_of(results.begin(), results.end(),
                      [&](const CheckResult& r) { return r.name.rfind(prefix, 0) == 0; }));
  }
}

TEST_CASE("a perturbed kernel is caught") {
  VerifyOptions options;
  options.kernel_perturbation = 0.01;
  const auto results = run_verification(options);
  CHECK_FALSE(find(results, "relativistic/quadrature-vs-series").passed);
  CHECK(find(results, "galilean/position-space-overlap").passed);
}

TEST_CASE("tighter tolerance still passes") {
  VerifyOptions options;
  options.tol = 1e-11;
  for (const auto& r : run_verification(options)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
