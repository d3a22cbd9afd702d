#pragma once

#include "dgbec/demos.hpp"
#include "dgbec/resolve.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dgbec {

struct SuiteOptions {
    std::uint64_t seed = 42;
    Field field = Field::prime(7);
};

// Outcome of one named group of exact checks.
struct CheckResult {
    std::string name;
    std::size_t cases = 0, checks = 0, failed = 0;
    std::vector<std::string> failures;  // the first few failing checks
    std::vector<std::pair<std::string, std::string>> facts;

    bool pass() const { return failed == 0 && checks > 0; }
    bool expect(bool ok, const std::string& what);
    void fact(const std::string& key, const std::string& value) { facts.push_back({key, value}); }
};

// Criteria 1..11; 11 (determinism) is checked by rerunning the selftest.
std::vector<std::string> criterion_names();
CheckResult run_criterion(int id, const SuiteOptions& opt);

// One small check per operation of every module.
std::vector<CheckResult> op_coverage(const SuiteOptions& opt);

struct SelftestReport {
    std::vector<CheckResult> ops, criteria;
    bool pass() const;
};
// Operation coverage and criteria 1..10; criteria run concurrently, results in order.
SelftestReport selftest(const SuiteOptions& opt);

// Stable key-value lines for a result, prefixed by its section.
std::vector<std::string> result_lines(const std::string& section, const CheckResult& r);
std::vector<std::string> selftest_lines(const SelftestReport& r);

}  // namespace dgbec
