#ifndef TRESSE_SAMPLING_HPP
#define TRESSE_SAMPLING_HPP

#include "tresse/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tresse {

// Axis-aligned box with exact rational endpoints, parsed from
// "x1:1:2,x2:0:1" (each axis name:lo:hi, endpoints integers or fractions).
struct Box {
    std::vector<std::string> names;
    std::vector<Rat> lo, hi;

    int dim() const { return static_cast<int>(names.size()); }
    int axis(const std::string& name) const; // -1 if absent
    bool contains(const std::vector<double>& p, double rel_margin) const;
    std::string str() const;

    static Box parse(const std::string& text);
};

std::uint64_t splitmix64(std::uint64_t x);

// Row r of a sampling run draws from mt19937_64 seeded with
// splitmix64(seed XOR golden_gamma * (r + 1)); uniform doubles come from the
// top 53 bits. Fixed across platforms by the C++ standard's definition of
// mt19937_64.
class RowRng {
public:
    RowRng(std::uint64_t seed, std::uint64_t row);
    double uniform01(); // in [0, 1)
    // lo + (hi - lo) * uniform01(), exact (the double factor is dyadic).
    Rat rat_between(const Rat& lo, const Rat& hi);

private:
    std::mt19937_64 eng_;
};

} // namespace tresse

#endif
