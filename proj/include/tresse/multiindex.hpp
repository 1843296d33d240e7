#ifndef TRESSE_MULTIINDEX_HPP
#define TRESSE_MULTIINDEX_HPP

#include "tresse/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tresse {

// Exponent vector of fixed length n. Lexicographic order on the entries is
// the canonical term order used everywhere (map keys, printing, CSV columns).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int n);
    static MultiIndex unit(int n, int i);

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    int total() const;
    Int factorial() const; // alpha! = prod entries!

    MultiIndex plus(int i) const;
    MultiIndex minus(int i) const;       // entry must be positive
    MultiIndex operator+(const MultiIndex&) const;
    MultiIndex operator-(const MultiIndex&) const; // componentwise, must stay >= 0
    bool leq(const MultiIndex&) const;             // componentwise

    // prod C(a_i, b_i); zero if b !<= a.
    static Int binomial(const MultiIndex& a, const MultiIndex& b);

    std::string key() const; // "2,0"
    static MultiIndex parse_key(const std::string& key, int n);

    // Graded enumeration: total degree ascending, lexicographic within a degree.
    static std::vector<MultiIndex> all_up_to(int n, int max_total);
    static std::vector<MultiIndex> all_of_degree(int n, int total);

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> e_;
};

} // namespace tresse

#endif
