#include "voa/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

QSeries::QSeries(long long denom, Rat order) : denom_(denom), order_(order) {
    if (denom <= 0) throw std::invalid_argument("QSeries: denom must be positive");
}

long long QSeries::key(const Rat& e) const {
    Rat k = e * Rat(denom_);
    if (!k.is_integer())
        throw std::invalid_argument("QSeries: exponent " + e.str() +
                                    " not on lattice (1/" + std::to_string(denom_) + ")Z");
    return k.num();
}

Rat QSeries::coeff(const Rat& e) const {
    if (e > order_)
        throw std::out_of_range("QSeries: coefficient of q^" + e.str() +
                                " beyond truncation order " + order_.str());
    auto it = c_.find(key(e));
    return it == c_.end() ? Rat(0) : it->second;
}

void QSeries::set_coeff(const Rat& e, const Rat& c) {
    if (e > order_) return;
    long long k = key(e);
    if (c.is_zero())
        c_.erase(k);
    else
        c_[k] = c;
}

void QSeries::add_coeff(const Rat& e, const Rat& c) {
    if (e > order_ || c.is_zero()) return;
    long long k = key(e);
    auto [it, fresh] = c_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Rat QSeries::leading_exponent() const {
    if (c_.empty()) return order_ + Rat(1);
    return exp_of(c_.begin()->first);
}

std::vector<Rat> QSeries::support() const {
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& [k, v] : c_) out.push_back(exp_of(k));
    return out;
}

QSeries QSeries::truncated(Rat new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("QSeries: cannot extend truncation order");
    QSeries r(denom_, new_order);
    for (const auto& [k, v] : c_)
        if (exp_of(k) <= new_order) r.c_[k] = v;
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.denom_ != b.denom_)
        throw std::invalid_argument("QSeries: mixed exponent lattices");
    QSeries r(a.denom_, std::min(a.order_, b.order_));
    for (const auto& [k, v] : a.c_)
        if (a.exp_of(k) <= r.order_) r.c_[k] = v;
    for (const auto& [k, v] : b.c_) {
        if (b.exp_of(k) > r.order_) continue;
        auto [it, fresh] = r.c_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + b.scaled(Rat(-1));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.denom_ != b.denom_)
        throw std::invalid_argument("QSeries: mixed exponent lattices");
    // With all exponents >= 0, coefficients are complete up to
    // min(order_a + lead_b, order_b + lead_a): every cross term below that
    // bound draws only on known coefficients of both factors.
    for (const auto* s : {&a, &b})
        if (!s->c_.empty() && s->c_.begin()->first < 0)
            throw std::invalid_argument("QSeries: negative exponents unsupported in products");
    QSeries r(a.denom_, std::min(a.order_ + b.leading_exponent(),
                                 b.order_ + a.leading_exponent()));
    long long klim = (r.order_ * Rat(r.denom_)).floor();
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            long long k = ka + kb;
            if (k > klim) break;  // b ascending
            Rat prod = va * vb;
            auto [it, fresh] = r.c_.try_emplace(k, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

QSeries QSeries::scaled(const Rat& c) const {
    QSeries r(denom_, order_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

QSeries QSeries::shifted(const Rat& e) const {
    QSeries r(denom_, order_);
    long long ke = key(e);
    for (const auto& [k, v] : c_) {
        if (exp_of(k + ke) > order_) break;
        r.c_[k + ke] = v;
    }
    return r;
}

QSeries QSeries::inverse() const {
    if (leading_exponent() != Rat(0))
        throw std::domain_error("QSeries: inverse needs a unit constant term");
    // Long division against integer-keyed coefficients.
    Rat c0 = c_.begin()->second;
    QSeries r(denom_, order_);
    long long kmax = (order_ * Rat(denom_)).floor();
    for (long long k = 0; k <= kmax; ++k) {
        Rat acc = (k == 0) ? Rat(1) : Rat(0);
        // acc - sum_{0<j<=k} this[j] * r[k-j], all divided by c0
        for (const auto& [j, v] : c_) {
            if (j <= 0) continue;
            if (j > k) break;
            auto it = r.c_.find(k - j);
            if (it != r.c_.end()) acc -= v * it->second;
        }
        if (!acc.is_zero()) r.c_[k] = acc / c0;
    }
    return r;
}

bool QSeries::equal_to(const QSeries& b, Rat up_to, Rat* mismatch) const {
    if (denom_ != b.denom_)
        throw std::invalid_argument("QSeries: mixed exponent lattices");
    Rat lim = std::min(up_to, std::min(order_, b.order_));
    long long klim = (lim * Rat(denom_)).floor();
    auto ia = c_.begin(), ib = b.c_.begin();
    while (true) {
        bool ea = (ia == c_.end() || ia->first > klim);
        bool eb = (ib == b.c_.end() || ib->first > klim);
        if (ea && eb) return true;
        if (!ea && !eb && ia->first == ib->first) {
            if (ia->second != ib->second) {
                if (mismatch) *mismatch = exp_of(ia->first);
                return false;
            }
            ++ia;
            ++ib;
            continue;
        }
        long long k = std::min(ea ? klim + 1 : ia->first, eb ? klim + 1 : ib->first);
        if (mismatch) *mismatch = exp_of(k);
        return false;
    }
}

std::string QSeries::str() const {
    std::string out;
    for (const auto& [k, v] : c_) {
        out += "q^(" + exp_of(k).str() + "): " + v.str() + "\n";
    }
    return out;
}

QSeries QSeries::one(long long denom, Rat order) {
    QSeries r(denom, order);
    r.set_coeff(Rat(0), Rat(1));
    return r;
}

QSeries QSeries::qpochhammer_inverse(int d, long long denom, Rat order) {
    QSeries r = one(denom, order);
    long long nmax = order.floor();
    for (long long n = 1; n <= nmax; ++n) {
        // geometric factor 1/(1-q^n) applied d times
        QSeries g(denom, order);
        for (long long k = 0; Rat(n * k) <= order; ++k) g.set_coeff(Rat(n * k), Rat(1));
        for (int i = 0; i < d; ++i) r *= g;
    }
    return r.truncated(order);
}

QSeries QSeries::plus_pochhammer_inverse(int d, long long denom, Rat order) {
    QSeries r = one(denom, order);
    long long nmax = order.floor();
    for (long long n = 1; n <= nmax; ++n) {
        // 1/(1+q^n) = sum (-1)^k q^{nk}
        QSeries g(denom, order);
        for (long long k = 0; Rat(n * k) <= order; ++k)
            g.set_coeff(Rat(n * k), Rat(k % 2 == 0 ? 1 : -1));
        for (int i = 0; i < d; ++i) r *= g;
    }
    return r.truncated(order);
}

}  // namespace voa
