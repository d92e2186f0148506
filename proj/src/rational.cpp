#include "ugit/rational.hpp"

#include <cctype>
#include <ostream>

namespace ugit {

Rat Rat::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail("BadRational", "empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        fail("BadRational", "unparseable rational literal: '" + text + "'");
    if (v.get_den() == 0) fail("DivisionByZero", "rational with zero denominator");
    v.canonicalize();
    return Rat(std::move(v));
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

std::string EpsRat::str() const {
    if (inf_.is_zero()) return std_.str();
    std::string out = std_.str();
    Rat mag = inf_;
    if (inf_.sign() < 0) {
        out += " - ";
        mag = -inf_;
    } else {
        out += " + ";
    }
    if (mag == Rat(1))
        out += "eps";
    else
        out += mag.str() + "*eps";
    return out;
}

std::ostream& operator<<(std::ostream& os, const EpsRat& r) {
    return os << r.str();
}

} // namespace ugit
