#include "cbx/series.hpp"

#include <sstream>

namespace cbx {

Series& Series::operator+=(const Series& o)
{
    for (int e = 0; e <= std::min(order_, o.order_); ++e)
        c_[static_cast<size_t>(e)] += o.c_[static_cast<size_t>(e)];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    for (int e = 0; e <= std::min(order_, o.order_); ++e)
        c_[static_cast<size_t>(e)] -= o.c_[static_cast<size_t>(e)];
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    Series r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= r.order_; ++j)
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
}

Series& Series::mul_geom(int k)
{
    for (int e = k; e <= order_; ++e) c_[static_cast<size_t>(e)] += c_[static_cast<size_t>(e - k)];
    return *this;
}

Series& Series::shift_up(int k)
{
    for (int e = order_; e >= 0; --e)
        c_[static_cast<size_t>(e)] = (e >= k) ? c_[static_cast<size_t>(e - k)] : 0;
    return *this;
}

Series Series::truncated(int order) const
{
    Series s(order);
    for (int e = 0; e <= std::min(order, order_); ++e) s.c_[static_cast<size_t>(e)] = coeff(e);
    return s;
}

std::vector<std::pair<int, long long>> Series::items() const
{
    std::vector<std::pair<int, long long>> r;
    for (int e = 0; e <= order_; ++e)
        if (c_[static_cast<size_t>(e)] != 0) r.emplace_back(e, c_[static_cast<size_t>(e)]);
    return r;
}

std::string Series::str() const
{
    std::ostringstream os;
    bool first = true;
    for (auto [e, v] : items()) {
        if (!first) os << " + ";
        first = false;
        if (e == 0)
            os << v;
        else if (v == 1)
            os << "t^" << e;
        else
            os << v << "*t^" << e;
    }
    if (first) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

} // namespace cbx
