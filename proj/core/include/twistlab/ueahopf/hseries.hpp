#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace twistlab::ueahopf {

// Truncated power series c0 + c1 h + ... + cN h^N. Products drop every term
// of degree > N and the truncation of a result is the smaller one.
template <class T>
class HSeries {
public:
    HSeries() = default;
    explicit HSeries(int order, const T& zero = T()) : c_(static_cast<std::size_t>(order) + 1, zero) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    static HSeries constant(int order, const T& c0, const T& zero = T()) {
        HSeries s(order, zero);
        s.c_[0] = c0;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<T>& coefficients() const { return c_; }

    HSeries truncated(int n) const {
        HSeries r;
        r.c_.assign(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n + 1, static_cast<std::ptrdiff_t>(c_.size())));
        return r;
    }

    HSeries operator+(const HSeries& o) const {
        int n = std::min(order(), o.order());
        HSeries r;
        for (int k = 0; k <= n; ++k) r.c_.push_back(c_[k] + o.c_[k]);
        return r;
    }
    HSeries operator-(const HSeries& o) const {
        int n = std::min(order(), o.order());
        HSeries r;
        for (int k = 0; k <= n; ++k) r.c_.push_back(c_[k] - o.c_[k]);
        return r;
    }
    HSeries operator*(const HSeries& o) const {
        int n = std::min(order(), o.order());
        HSeries r;
        r.c_.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            T acc = c_[0] * o.c_[k];
            for (int i = 1; i <= k; ++i) acc = acc + c_[i] * o.c_[k - i];
            r.c_.push_back(acc);
        }
        return r;
    }
    template <class S>
    HSeries scaled(const S& s) const {
        HSeries r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    template <class F>
    auto map(F&& f) const -> HSeries<decltype(f(std::declval<const T&>()))> {
        HSeries<decltype(f(std::declval<const T&>()))> r(order());
        for (int k = 0; k <= order(); ++k) r[k] = f(c_[static_cast<std::size_t>(k)]);
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<T> c_;
};

}  // namespace twistlab::ueahopf
