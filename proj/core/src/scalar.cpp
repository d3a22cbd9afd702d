#include "dgbec/scalar.hpp"

#include <cctype>

namespace dgbec {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_same(const Field& a, const Field& b)
{
    if (a != b) throw FieldError("scalars from different fields combined");
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p)) throw FieldError("field characteristic must be a prime below 2^31");
    return Field(p);
}

std::string Field::describe() const { return p_ == 0 ? "Q" : std::to_string(p_); }

std::uint32_t Field::reduce(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::reduce(const mpz_class& v) const
{
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t Field::inv(std::uint32_t a) const
{
    if (a == 0) throw FieldError("division by zero");
    long long t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

Scalar::Scalar(Field f, long long v) : f_(f)
{
    if (f_.is_rational())
        q_ = mpq_class(mpz_class(std::to_string(v)));
    else
        r_ = f_.reduce(v);
}

Scalar::Scalar(Field f, const mpq_class& q) : f_(f)
{
    if (f_.is_rational()) {
        q_ = q;
        q_.canonicalize();
    } else {
        std::uint32_t n = f_.reduce(q.get_num());
        std::uint32_t d = f_.reduce(q.get_den());
        r_ = f_.mul(n, f_.inv(d));
    }
}

Scalar Scalar::from_residue(Field f, std::uint32_t r)
{
    Scalar s;
    s.f_ = f;
    s.r_ = r;
    return s;
}

Scalar Scalar::parse(Field f, const std::string& text)
{
    if (text.empty()) throw FieldError("empty scalar");
    auto valid_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw FieldError("malformed scalar '" + text + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0) throw FieldError("zero denominator in '" + text + "'");
    if (!f.is_rational() && f.reduce(d) == 0) throw FieldError("denominator vanishes in F_p: '" + text + "'");
    return Scalar(f, mpq_class(n, d));
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same(f_, o.f_);
    if (f_.is_rational()) return Scalar(f_, mpq_class(q_ + o.q_));
    return from_residue(f_, f_.add(r_, o.r_));
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check_same(f_, o.f_);
    if (f_.is_rational()) return Scalar(f_, mpq_class(q_ - o.q_));
    return from_residue(f_, f_.sub(r_, o.r_));
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same(f_, o.f_);
    if (f_.is_rational()) return Scalar(f_, mpq_class(q_ * o.q_));
    return from_residue(f_, f_.mul(r_, o.r_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const
{
    if (f_.is_rational()) return Scalar(f_, mpq_class(-q_));
    return from_residue(f_, f_.neg(r_));
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw FieldError("division by zero");
    if (f_.is_rational()) return Scalar(f_, mpq_class(1 / q_));
    return from_residue(f_, f_.inv(r_));
}

bool Scalar::operator==(const Scalar& o) const
{
    if (f_ != o.f_) return false;
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const
{
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace dgbec
