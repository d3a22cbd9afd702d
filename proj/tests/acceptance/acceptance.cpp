#include "dgbec/suites.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

using namespace dgbec;

int main(int argc, char** argv)
{
    SuiteOptions opt;
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
    const SelftestReport first = selftest(opt);
    const SelftestReport second = selftest(opt);
    const auto names = criterion_names();
    bool all = true;
    auto line = [&](int id, bool ok, const std::string& detail) {
        all = all && ok;
        std::cout << "criterion " << id << " " << names[id - 1] << " " << (ok ? "pass" : "fail");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    };
    for (int id = 1; id <= 10; ++id) {
        const CheckResult& r = first.criteria[id - 1];
        line(id, r.pass(), std::to_string(r.cases) + " cases, " + std::to_string(r.checks) + " checks");
        for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
    }
    const auto a = selftest_lines(first), b = selftest_lines(second);
    line(11, a == b && !a.empty(), std::to_string(a.size()) + " report lines compared");
    std::size_t ops_failed = 0;
    for (const auto& r : first.ops)
        if (!r.pass()) {
            ++ops_failed;
            std::cout << "operation " << r.name << " fail\n";
        }
    all = all && ops_failed == 0;
    std::cout << "operations " << first.ops.size() - ops_failed << "/" << first.ops.size() << " pass\n";
    std::cout << "acceptance " << (all ? "pass" : "fail") << "\n";
    return all ? 0 : 1;
}
