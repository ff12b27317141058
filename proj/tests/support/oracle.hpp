#pragma once
// Brute-force reference implementations used only by the tests. They use a
// separate fixed-width fraction type and the textbook definitions, so they
// share no arithmetic or algorithm with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "postdom/model.hpp"
#include "postdom/orders.hpp"

namespace oracle {

class Frac {
public:
    Frac(long long n = 0, long long d = 1) {
        if (d == 0) {
            throw std::domain_error("zero denominator");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        num_ = g ? n / g : 0;
        den_ = g ? d / g : 1;
    }
    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Frac operator+(Frac a, Frac b) { return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_); }
    friend Frac operator-(Frac a, Frac b) { return a + Frac(-b.num_, b.den_); }
    friend Frac operator*(Frac a, Frac b) { return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_); }
    friend Frac operator/(Frac a, Frac b) { return a * Frac(b.den_, b.num_); }
    friend bool operator==(Frac a, Frac b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(Frac a, Frac b) { return wide(a.num_) * b.den_ < wide(b.num_) * a.den_; }
    friend bool operator<=(Frac a, Frac b) { return !(b < a); }
    friend bool operator>(Frac a, Frac b) { return b < a; }
    friend bool operator>=(Frac a, Frac b) { return !(a < b); }
    Frac& operator+=(Frac b) { return *this = *this + b; }

private:
    using Wide = __int128;
    static Wide wide(long long v) { return static_cast<Wide>(v); }
    static Frac from_wide(Wide n, Wide d) {
        auto abs = [](Wide v) { return v < 0 ? -v : v; };
        Wide a = abs(n);
        Wide b = abs(d);
        while (b != 0) {
            const Wide t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr Wide limit = static_cast<Wide>(INT64_MAX);
        if (abs(n) > limit || abs(d) > limit) {
            throw std::overflow_error("oracle fraction overflow");
        }
        return Frac(static_cast<long long>(n), static_cast<long long>(d));
    }
    long long num_;
    long long den_;
};

using Vec = std::vector<Frac>;

inline Frac of(const postdom::Rational& r) {
    if (!r.numerator().fits_slong_p() || !r.denominator().fits_slong_p()) {
        throw std::overflow_error("rational too large for the oracle");
    }
    return Frac(r.numerator().get_si(), r.denominator().get_si());
}

inline Vec of(const postdom::RationalVector& v) {
    Vec out;
    for (const auto& r : v) {
        out.push_back(of(r));
    }
    return out;
}

inline bool same(const postdom::Rational& r, Frac f) { return of(r) == f; }

inline bool same(const postdom::RationalVector& v, const Vec& f) { return of(v) == f; }

inline std::vector<Vec> kernel_of(const postdom::SignalingStructure& s) {
    std::vector<Vec> out;
    for (const auto& row : s.kernel()) {
        out.push_back(of(row));
    }
    return out;
}

// sum_theta w(theta) sigma(s|theta)
inline Vec mix(const Vec& w, const std::vector<Vec>& kernel) {
    Vec out(kernel.at(0).size());
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        for (std::size_t s = 0; s < out.size(); ++s) {
            out[s] += w[t] * kernel[t][s];
        }
    }
    return out;
}

inline Vec restrict_to(const Vec& prior, const std::vector<bool>& in) {
    Frac mass;
    for (std::size_t t = 0; t < prior.size(); ++t) {
        if (in[t]) {
            mass += prior[t];
        }
    }
    Vec out(prior.size());
    for (std::size_t t = 0; t < prior.size(); ++t) {
        out[t] = in[t] ? prior[t] / mass : Frac(0);
    }
    return out;
}

// Bayes' rule evaluated per signal as P(Gamma and s) / P(s).
inline std::vector<std::optional<Frac>> posterior(const Vec& prior, const std::vector<Vec>& kernel,
                                                  const std::vector<bool>& in) {
    std::vector<std::optional<Frac>> out;
    for (std::size_t s = 0; s < kernel.at(0).size(); ++s) {
        Frac joint;
        Frac total;
        for (std::size_t t = 0; t < prior.size(); ++t) {
            total += prior[t] * kernel[t][s];
            if (in[t]) {
                joint += prior[t] * kernel[t][s];
            }
        }
        out.push_back(total == Frac(0) ? std::nullopt : std::optional<Frac>(joint / total));
    }
    return out;
}

struct Dist {
    Vec values;
    Vec probs;
};

inline Frac prob_at(const Dist& d, Frac v) {
    Frac p;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        if (d.values[i] == v) {
            p += d.probs[i];
        }
    }
    return p;
}

inline Vec union_support(const Dist& x, const Dist& y) {
    Vec u = x.values;
    u.insert(u.end(), y.values.begin(), y.values.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

inline Dist dist_of(const postdom::LabeledRandomVariable& x) { return {of(x.support()), of(x.probabilities())}; }

// Every pair v < w of the union support, not only neighbours.
inline bool lr(const Dist& x, const Dist& y) {
    const Vec u = union_support(x, y);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (prob_at(x, u[j]) * prob_at(y, u[i]) < prob_at(x, u[i]) * prob_at(y, u[j])) {
                return false;
            }
        }
    }
    return true;
}

inline bool fosd(const Dist& x, const Dist& y) {
    for (const Frac v : union_support(x, y)) {
        Frac tx;
        Frac ty;
        for (std::size_t i = 0; i < x.values.size(); ++i) {
            if (x.values[i] >= v) {
                tx += x.probs[i];
            }
        }
        for (std::size_t i = 0; i < y.values.size(); ++i) {
            if (y.values[i] >= v) {
                ty += y.probs[i];
            }
        }
        if (tx < ty) {
            return false;
        }
    }
    return true;
}

inline Frac mean(const Dist& x) {
    Frac m;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        m += x.values[i] * x.probs[i];
    }
    return m;
}

// Solves target = a pi^G + (1 - a) pi through the total mass off Gamma, then
// checks every coordinate.
inline std::optional<Frac> segment(const Vec& target, const Vec& prior, const std::vector<bool>& in) {
    Frac off_target;
    Frac off_prior;
    for (std::size_t t = 0; t < prior.size(); ++t) {
        if (!in[t]) {
            off_target += target[t];
            off_prior += prior[t];
        }
    }
    const Frac a = Frac(1) - off_target / off_prior;
    if (a < Frac(0) || a > Frac(1)) {
        return std::nullopt;
    }
    const Vec cond = restrict_to(prior, in);
    for (std::size_t t = 0; t < prior.size(); ++t) {
        if (!(a * cond[t] + (Frac(1) - a) * prior[t] == target[t])) {
            return std::nullopt;
        }
    }
    return a;
}

inline Frac dot(const Vec& a, const Vec& b) {
    Frac s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Exhaustive search over x in {-1/2, -1/2 + 1/k, ..., 1/2}^n.
inline std::optional<Vec> grid_witness(const Vec& target, const Vec& prior, const std::vector<bool>& in, int k) {
    const std::size_t n = prior.size();
    const Vec cond = restrict_to(prior, in);
    std::vector<int> idx(n, 0);
    while (true) {
        Vec x;
        for (int i : idx) {
            x.push_back(Frac(-1, 2) + Frac(i, k));
        }
        if (dot(prior, x) == Frac(0) && dot(cond, x) > Frac(0) && dot(target, x) < Frac(0)) {
            return x;
        }
        std::size_t p = 0;
        while (p < n && ++idx[p] > k) {
            idx[p++] = 0;
        }
        if (p == n) {
            return std::nullopt;
        }
    }
}

// Every pair of states, as ratios target/prior.
inline bool prior_lr(const Vec& target, const Vec& prior) {
    for (std::size_t i = 0; i < prior.size(); ++i) {
        for (std::size_t j = i + 1; j < prior.size(); ++j) {
            if (target[j] * prior[i] < target[i] * prior[j]) {
                return false;
            }
        }
    }
    return true;
}

// Every 2x2 minor of the kernel, not only adjacent ones.
inline bool mlrp(const std::vector<Vec>& kernel) {
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        for (std::size_t u = t + 1; u < kernel.size(); ++u) {
            for (std::size_t s = 0; s < kernel[t].size(); ++s) {
                for (std::size_t r = s + 1; r < kernel[t].size(); ++r) {
                    if (kernel[u][r] * kernel[t][s] < kernel[t][r] * kernel[u][s]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace oracle
