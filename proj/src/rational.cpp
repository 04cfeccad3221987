#include "hamming/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hamming {

namespace {
long long parse_ll(const std::string& s) {
    if (s.empty()) throw invalid_input("empty number");
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw invalid_input("bad number: " + s);
    }
    if (pos != s.size()) throw invalid_input("bad number: " + s);
    return v;
}
}  // namespace

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = parse_ll(s.substr(0, slash));
        long long d = parse_ll(s.substr(slash + 1));
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.empty()) return Rat(parse_ll(head.empty() ? "0" : head));
        for (char c : tail)
            if (!std::isdigit((unsigned char)c)) throw invalid_input("bad number: " + s);
        if (tail.size() > 18) throw invalid_input("decimal too long: " + s);
        bool neg = !head.empty() && head[0] == '-';
        long long ip = parse_ll(head.empty() || head == "-" ? "0" : head);
        long long den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        long long frac = parse_ll(tail);
        Rat r = Rat(ip < 0 ? -ip : ip) + Rat(frac, den);
        if (neg) r = -r;
        return r;
    }
    return Rat(parse_ll(s));
}

}  // namespace hamming
