#include "tresse/multiindex.hpp"

#include "tresse/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tresse {

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
        if (v < 0) throw dimension_error("multi-index entries must be non-negative");
}

MultiIndex MultiIndex::zero(int n) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return MultiIndex(std::move(e));
}

int MultiIndex::total() const {
    int s = 0;
    for (int v : e_) s += v;
    return s;
}

Int MultiIndex::factorial() const {
    Int r = 1;
    for (int v : e_) r *= tresse::factorial(static_cast<unsigned long>(v));
    return r;
}

MultiIndex MultiIndex::plus(int i) const {
    MultiIndex r = *this;
    r.e_[static_cast<std::size_t>(i)] += 1;
    return r;
}

MultiIndex MultiIndex::minus(int i) const {
    MultiIndex r = *this;
    if (r.e_[static_cast<std::size_t>(i)] == 0) throw dimension_error("multi-index entry underflow");
    r.e_[static_cast<std::size_t>(i)] -= 1;
    return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (size() != o.size()) throw dimension_error("multi-index length mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < size(); ++i) r.e_[static_cast<std::size_t>(i)] += o[i];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (size() != o.size()) throw dimension_error("multi-index length mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < size(); ++i) {
        r.e_[static_cast<std::size_t>(i)] -= o[i];
        if (r.e_[static_cast<std::size_t>(i)] < 0) throw dimension_error("multi-index subtraction underflow");
    }
    return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i)
        if ((*this)[i] > o[i]) return false;
    return true;
}

Int MultiIndex::binomial(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw dimension_error("multi-index length mismatch");
    Int r = 1;
    for (int i = 0; i < a.size(); ++i)
        r *= tresse::binomial(static_cast<unsigned long>(a[i]), static_cast<unsigned long>(b[i]));
    return r;
}

std::string MultiIndex::key() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << e_[static_cast<std::size_t>(i)];
    }
    return os.str();
}

MultiIndex MultiIndex::parse_key(const std::string& key, int n) {
    std::vector<int> e;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw data_error("invalid multi-index key: " + key);
        }
        if (used != part.size() || v < 0) throw data_error("invalid multi-index key: " + key);
        e.push_back(v);
    }
    if (static_cast<int>(e.size()) != n)
        throw data_error("multi-index key '" + key + "' has wrong length, expected " + std::to_string(n));
    return MultiIndex(std::move(e));
}

static void enumerate_degree(int n, int total, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(total);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        enumerate_degree(n, total - v, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiIndex> MultiIndex::all_of_degree(int n, int total) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    enumerate_degree(n, total, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> MultiIndex::all_up_to(int n, int max_total) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= max_total; ++d) {
        auto level = all_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace tresse
