#pragma once

#include <string>
#include <vector>

#include "gjsum/global.hpp"

namespace gjsum {

// One property suite run over a generated corpus. Failures carry the
// smallest failing witness encountered.
struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& witness);
    std::string summary() const;
};

std::vector<std::string> suite_names();
// Runs the named suite; unknown names raise input_error listing the
// available suites. max_order = 0 means the suite default.
SuiteResult run_suite(const std::string& name, long max_order = 0, unsigned sign_cap = 4096);

SuiteResult suite_hilbert(long max_order = 24);   // valuation/existence sweep
SuiteResult suite_anchor();                       // the explicit p=3 computation
SuiteResult suite_adams(long max_order = 16);     // Adams operation identities
SuiteResult suite_twisted_y(long max_order = 24); // closed-form comparison
SuiteResult suite_gauss();                        // Gauss-sum identities
SuiteResult suite_j2_rational();                  // J_2 rationality sweep
SuiteResult suite_decomposition();                // global two-route identity
SuiteResult suite_symplectic(unsigned sign_cap = 4096);

// Shared corpora.
std::vector<GroupRef> adams_group_corpus(long max_order);
std::vector<GroupRef> local_group_corpus(long max_order);
std::vector<LocalExtensionData> local_data_corpus(long max_group_order,
                                                  const std::vector<long>& primes);

// Fixture set for the decomposition identity.
std::vector<GlobalExtensionData> decomposition_fixtures();

}  // namespace gjsum
