#include "tresse/sampling.hpp"

#include "tresse/errors.hpp"

#include <sstream>

namespace tresse {

int Box::axis(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

bool Box::contains(const std::vector<double>& p, double rel_margin) const {
    if (p.size() != names.size()) return false;
    for (std::size_t i = 0; i < names.size(); ++i) {
        double a = rat_to_double(lo[i]);
        double b = rat_to_double(hi[i]);
        double m = rel_margin * (b - a);
        if (p[i] < a - m || p[i] > b + m) return false;
    }
    return true;
}

std::string Box::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ',';
        os << names[i] << ':' << rat_to_string(lo[i]) << ':' << rat_to_string(hi[i]);
    }
    return os.str();
}

Box Box::parse(const std::string& text) {
    Box box;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        std::istringstream ps(part);
        std::string name, lo, hi;
        if (!std::getline(ps, name, ':') || !std::getline(ps, lo, ':') || !std::getline(ps, hi))
            throw data_error("bad box axis '" + part + "' (expected name:lo:hi)");
        Rat a, b;
        try {
            a = rat_from_string(lo);
            b = rat_from_string(hi);
        } catch (const error& e) {
            throw data_error("bad box endpoint in '" + part + "': " + e.what());
        }
        if (!(a < b)) throw data_error("box axis '" + name + "' is empty (lo >= hi)");
        if (box.axis(name) >= 0) throw data_error("duplicate box axis '" + name + "'");
        box.names.push_back(name);
        box.lo.push_back(a);
        box.hi.push_back(b);
    }
    if (box.names.empty()) throw data_error("empty box specification");
    return box;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RowRng::RowRng(std::uint64_t seed, std::uint64_t row)
  : eng_(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (row + 1)))) {}

double RowRng::uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

Rat RowRng::rat_between(const Rat& lo, const Rat& hi) {
    Rat t = rat_from_double(uniform01());
    return lo + (hi - lo) * t;
}

} // namespace tresse
