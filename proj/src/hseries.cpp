#include <stabkit/hseries.hpp>

#include <sstream>

namespace stabkit {

std::string HSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= dim_; ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HSeries& s) { return os << s.str(); }

}  // namespace stabkit
