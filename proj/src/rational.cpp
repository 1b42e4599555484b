#include "voa/rational.hpp"

#include <charconv>
#include <limits>

namespace voa {

namespace {

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned __int128 uabs(__int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-v)
                 : static_cast<unsigned __int128>(v);
}

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parse_error("Rat: bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rat Rat::make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (n == 0) return Rat();
    unsigned __int128 g = gcd_u128(uabs(n), static_cast<unsigned __int128>(d));
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
        throw overflow_error("Rat: value exceeds 64-bit range");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
}

void Rat::assign(long long n, long long d) {
    *this = make(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rat Rat::parse(std::string_view s) {
    if (s.empty()) throw parse_error("Rat: empty string");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_ll(s));
    return Rat(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat binomial(long long x, int k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= Rat(x - i, i + 1);
    return r;
}

}  // namespace voa
