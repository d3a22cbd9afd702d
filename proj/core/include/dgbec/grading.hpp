#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dgbec {

class DegreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grading group datum: either Z restricted to a window [lo, hi] or Z/2p.
// sigma is kept as a full table over Z/2p so that malformed data can be
// represented and reported by validate_datum.
class GradingDatum {
public:
    enum class Kind { IntegerWindow, Cyclic };

    static GradingDatum integers(int lo, int hi);
    static GradingDatum cyclic(int p);
    static GradingDatum cyclic(int p, std::vector<std::vector<int>> sigma_table);

    Kind kind() const { return kind_; }
    bool is_integer() const { return kind_ == Kind::IntegerWindow; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int half_order() const { return p_; }
    int order() const { return 2 * p_; }
    int one() const { return 1; }
    const std::vector<std::vector<int>>& sigma_table() const { return table_; }

    // Reduces a group element to its representative; throws DegreeError
    // when an integer degree leaves the window.
    int normalize(long long a) const;
    // Reduction without the window check (morphism degrees may exceed it).
    int reduce(long long a) const;
    bool representable(long long a) const;
    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }

    int sigma(int a, int b) const;
    int koszul_sign(int a, int b) const { return sigma(a, b) ? -1 : 1; }
    // (-1)^{sigma(1, a)}, the sign of a degree-a shift of a differential
    int parity_sign(int a) const { return koszul_sign(1, a); }

    // Degrees that can carry nonzero components.
    std::vector<int> object_degrees() const;
    // Degrees n for which Hom^n between objects can be nonzero.
    std::vector<int> morphism_degrees() const;

    bool operator==(const GradingDatum& o) const;
    bool operator!=(const GradingDatum& o) const { return !(*this == o); }

    std::string describe() const;

private:
    Kind kind_ = Kind::IntegerWindow;
    int lo_ = 0, hi_ = 0, p_ = 1;
    std::vector<std::vector<int>> table_;
};

int koszul_sign(const GradingDatum& d, int a, int b);
std::vector<std::string> validate_datum(const GradingDatum& d);

}  // namespace dgbec
