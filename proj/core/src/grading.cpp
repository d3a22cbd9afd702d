#include "dgbec/grading.hpp"

#include <sstream>

namespace dgbec {

GradingDatum GradingDatum::integers(int lo, int hi)
{
    GradingDatum d;
    d.kind_ = Kind::IntegerWindow;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

GradingDatum GradingDatum::cyclic(int p)
{
    if (p < 1) throw DegreeError("Z/2p requires p >= 1");
    std::vector<std::vector<int>> t(2 * p, std::vector<int>(2 * p));
    for (int a = 0; a < 2 * p; ++a)
        for (int b = 0; b < 2 * p; ++b) t[a][b] = (a * b) & 1;
    return cyclic(p, std::move(t));
}

GradingDatum GradingDatum::cyclic(int p, std::vector<std::vector<int>> sigma_table)
{
    if (p < 1) throw DegreeError("Z/2p requires p >= 1");
    if (static_cast<int>(sigma_table.size()) != 2 * p) throw DegreeError("sigma table must be 2p x 2p");
    for (auto& row : sigma_table) {
        if (static_cast<int>(row.size()) != 2 * p) throw DegreeError("sigma table must be 2p x 2p");
        for (int& v : row) v &= 1;
    }
    GradingDatum d;
    d.kind_ = Kind::Cyclic;
    d.p_ = p;
    d.table_ = std::move(sigma_table);
    return d;
}

int GradingDatum::reduce(long long a) const
{
    if (kind_ == Kind::IntegerWindow) {
        if (a > (1LL << 30) || a < -(1LL << 30)) throw DegreeError("degree arithmetic overflow");
        return static_cast<int>(a);
    }
    long long m = 2LL * p_;
    long long r = a % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

bool GradingDatum::representable(long long a) const
{
    if (kind_ == Kind::Cyclic) return true;
    return a >= lo_ && a <= hi_;
}

int GradingDatum::normalize(long long a) const
{
    if (kind_ == Kind::IntegerWindow && !representable(a)) {
        std::ostringstream os;
        os << "degree " << a << " outside window [" << lo_ << ", " << hi_ << "]";
        throw DegreeError(os.str());
    }
    return reduce(a);
}

int GradingDatum::sigma(int a, int b) const
{
    if (kind_ == Kind::IntegerWindow) {
        long long x = a, y = b;
        return static_cast<int>(((x & 1) * (y & 1)) & 1);
    }
    return table_[reduce(a)][reduce(b)];
}

std::vector<int> GradingDatum::object_degrees() const
{
    std::vector<int> r;
    if (kind_ == Kind::IntegerWindow)
        for (int a = lo_; a <= hi_; ++a) r.push_back(a);
    else
        for (int a = 0; a < 2 * p_; ++a) r.push_back(a);
    return r;
}

std::vector<int> GradingDatum::morphism_degrees() const
{
    std::vector<int> r;
    if (kind_ == Kind::IntegerWindow)
        for (int a = lo_ - hi_; a <= hi_ - lo_; ++a) r.push_back(a);
    else
        for (int a = 0; a < 2 * p_; ++a) r.push_back(a);
    return r;
}

bool GradingDatum::operator==(const GradingDatum& o) const
{
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::IntegerWindow) return lo_ == o.lo_ && hi_ == o.hi_;
    return p_ == o.p_ && table_ == o.table_;
}

std::string GradingDatum::describe() const
{
    std::ostringstream os;
    if (kind_ == Kind::IntegerWindow)
        os << "Z [" << lo_ << ", " << hi_ << "]";
    else
        os << "Z/" << 2 * p_;
    return os.str();
}

int koszul_sign(const GradingDatum& d, int a, int b) { return d.koszul_sign(a, b); }

std::vector<std::string> validate_datum(const GradingDatum& d)
{
    std::vector<std::string> out;
    if (d.is_integer()) {
        if (!(d.lo() <= 0 && 0 <= d.hi())) out.push_back("window must contain 0");
        return out;
    }
    int m = d.order();
    const auto& t = d.sigma_table();
    if (t[1 % m][1 % m] != 1) out.push_back("sigma(1,1)!=1");
    bool sym = true, bil = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (t[a][b] != t[b][a]) sym = false;
            for (int c = 0; c < m; ++c)
                if (t[(a + b) % m][c] != ((t[a][c] + t[b][c]) & 1)) bil = false;
        }
    if (!sym) out.push_back("sigma not symmetric");
    if (!bil) out.push_back("sigma not bilinear");
    return out;
}

}  // namespace dgbec
