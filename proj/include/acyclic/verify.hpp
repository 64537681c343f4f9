#ifndef ACYCLIC_VERIFY_HPP
#define ACYCLIC_VERIFY_HPP

#include <cstdint>
#include <iosfwd>

namespace acyclic {

struct VerifyOptions {
    int max_n = 7;       // cap for permutation-enumeration checks (<= 8)
    int samples = 200;   // random graphs for the sampled sections
    std::uint64_t seed = 1;
    bool inject_fault = false;  // self-test: perturb one catalog term
    int threads = 0;
};

struct VerifyReport {
    long long checks = 0;
    long long failures = 0;
    bool ok() const { return failures == 0; }
};

/// Cross-validates the closed forms against the enumeration oracles:
/// moment equivalence, the 15-term catalog, bound sandwiches, the
/// feedback-set properties, sampler duality, degeneracy characterization
/// and the optimal-labeling construction. Failures serialize the
/// offending graph to `log`.
VerifyReport run_verify(const VerifyOptions& opt, std::ostream& log);

}  // namespace acyclic

#endif
