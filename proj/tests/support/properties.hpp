#pragma once

#include <cstdint>
#include <string>

// Property suites shared by the unit tests and the acceptance runner.
namespace props {

struct Result {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

Result cocycle_identity(long long samples, std::uint64_t seed);
Result cocycle_matches_arguments(long long samples, std::uint64_t seed);
Result meta_associative(long long samples, std::uint64_t seed);
Result decomposition_recomposes(long long lmax, long long Nmax);
Result coset_partition_counts(long long lmax, long long Nmax);

Result character_multiplicative(long long samples, std::uint64_t seed);
Result minus_identity_parity(long long samples, std::uint64_t seed);
Result adjoint_symmetry(long long samples, std::uint64_t seed);
// one-sided: misses (closed form false, no counterexample found) are counted in `cases` but not failures
struct OracleAgreement {
  Result result;
  long long pairs = 0;
  long long misses = 0;
};
OracleAgreement oracle_agreement(long long Nmax, long long lmax, int vectors_per_N, unsigned trials, std::uint64_t seed);

Result two_path_tl(long long lmax, long long nmax);
Result rad_case_representatives(std::uint64_t seed);
Result enumeration_complete(long long Nmax);

}  // namespace props
