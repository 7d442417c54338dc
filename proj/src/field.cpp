#include "covalg/field.hpp"

namespace covalg {

namespace {
long long parse_integer(const std::string& s) {
    if (s.empty()) throw bad_input("empty scalar");
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw bad_input("malformed scalar '" + s + "'");
    }
    if (pos != s.size()) throw bad_input("malformed scalar '" + s + "'");
    return v;
}
}  // namespace

PrimeField::Elem PrimeField::parse(const std::string& s) const {
    // residues are written as plain decimal integers; a/b is accepted too
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(parse_integer(s));
    Elem num = from_int(parse_integer(s.substr(0, slash)));
    Elem den = from_int(parse_integer(s.substr(slash + 1)));
    if (den == 0) throw bad_input("scalar '" + s + "' has zero denominator in GF(" + std::to_string(p_) + ")");
    return div(num, den);
}

RationalField::Elem RationalField::parse(const std::string& s) const {
    auto check_int = [](const std::string& part) {
        if (part.empty()) throw bad_input("malformed rational");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad_input("malformed rational '" + part + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw bad_input("malformed rational '" + part + "'");
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            check_int(s);
            return Elem(boost::multiprecision::cpp_int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        boost::multiprecision::cpp_int d(den);
        if (d == 0) throw bad_input("scalar '" + s + "' has zero denominator");
        return Elem(boost::multiprecision::cpp_int(num), d);
    } catch (const bad_input&) {
        throw;
    } catch (const std::exception&) {
        throw bad_input("malformed rational '" + s + "'");
    }
}

}  // namespace covalg
