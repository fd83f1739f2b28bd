#ifndef CBX_SERIES_HPP
#define CBX_SERIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cbx/error.hpp"

namespace cbx {

// Truncated integer-coefficient power series in the fugacity t.
class Series {
public:
    explicit Series(int order) : order_(order), c_(static_cast<size_t>(order) + 1, 0) {}

    static Series one(int order)
    {
        Series s(order);
        s.c_[0] = 1;
        return s;
    }
    static Series monomial(int order, int exponent, long long coeff = 1)
    {
        Series s(order);
        if (exponent < 0) throw NonIntegralExponent("negative exponent in Series");
        if (exponent <= order) s.c_[static_cast<size_t>(exponent)] = coeff;
        return s;
    }

    int order() const { return order_; }
    long long coeff(int e) const { return (e < 0 || e > order_) ? 0 : c_[static_cast<size_t>(e)]; }
    void add(int e, long long v)
    {
        if (e < 0) throw NonIntegralExponent("negative exponent in Series");
        if (e <= order_) c_[static_cast<size_t>(e)] += v;
    }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);

    // multiply by the geometric factor 1/(1 - t^k)
    Series& mul_geom(int k);
    // multiply by t^k
    Series& shift_up(int k);

    bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // truncate/extend view to a smaller order
    Series truncated(int order) const;

    // nonzero [exponent, coefficient] pairs in increasing exponent order
    std::vector<std::pair<int, long long>> items() const;

    std::string str() const;

private:
    int order_;
    std::vector<long long> c_;
};

} // namespace cbx

#endif
