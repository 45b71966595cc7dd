#include "piforge/rational.hpp"

#include "piforge/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace piforge {

std::string rat_to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat rat_from_string(const std::string& s) {
    auto parse_int = [&](const std::string& part) -> long long {
        if (part.empty()) throw DataError("empty rational component in '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw DataError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw DataError("malformed rational '" + s + "' (use integers or p/q)");
        }
        return std::strtoll(part.c_str(), nullptr, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DataError("zero denominator in rational '" + s + "'");
    return Rat(num, den);
}

double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::vector<long long> primitive_integer(const std::vector<Rat>& v) {
    long long lcm = 1;
    for (const auto& r : v) lcm = std::lcm(lcm, r.denominator());
    std::vector<long long> out(v.size());
    long long gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].numerator() * (lcm / v[i].denominator());
        gcd = std::gcd(gcd, out[i]);
    }
    if (gcd == 0) return out; // zero vector
    long long sign = 0;
    for (long long x : out) {
        if (x != 0) { sign = x > 0 ? 1 : -1; break; }
    }
    for (auto& x : out) x = x / gcd * sign;
    return out;
}

} // namespace piforge
