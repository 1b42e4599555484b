#include "voa/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace voa {

namespace {

int16_t check16(long long v, const char* what) {
    if (v < INT16_MIN || v > INT16_MAX)
        throw capacity_error(std::string("Point: ") + what + " out of range");
    return static_cast<int16_t>(v);
}

}  // namespace

Point Point::from(const LatticeVector& v) {
    long long d = 1;
    for (int i = 0; i < 3; ++i) d = std::lcm(d, v[i].den());
    Point p;
    p.d = check16(d, "denominator");
    long long g = d;
    long long nums[3];
    for (int i = 0; i < 3; ++i) {
        nums[i] = v[i].num() * (d / v[i].den());
        g = std::gcd(g, std::abs(nums[i]));
    }
    if (g > 1) {
        p.d = static_cast<int16_t>(d / g);
        for (int i = 0; i < 3; ++i) nums[i] /= g;
    }
    for (int i = 0; i < 3; ++i) p.n[i] = check16(nums[i], "coordinate");
    return p;
}

LatticeVector Point::vec() const {
    return {Rat(n[0], d), Rat(n[1], d), Rat(n[2], d)};
}

Rat Point::half_norm() const {
    long long s = 0;
    for (int i = 0; i < 3; ++i) s += static_cast<long long>(n[i]) * n[i];
    return Rat(s, static_cast<long long>(d) * d);
}

FockMonomial FockMonomial::lattice_point(const LatticeVector& p) {
    FockMonomial m;
    m.p_ = Point::from(p);
    return m;
}

FockMonomial FockMonomial::with_boson(int dir, int mode) const {
    if (mode >= 0) throw std::invalid_argument("FockMonomial: boson mode must be negative");
    if (nb_ >= kMaxBosons)
        throw capacity_error("FockMonomial: more than " + std::to_string(kMaxBosons) +
                             " oscillators");
    if (dir < 0 || dir > 127 || mode < -128)
        throw capacity_error("FockMonomial: oscillator out of range");
    Boson nb{static_cast<int8_t>(dir), static_cast<int8_t>(mode)};
    FockMonomial r = *this;
    int pos = 0;
    while (pos < r.nb_ && r.b_[pos] < nb) ++pos;
    for (int k = r.nb_; k > pos; --k) r.b_[k] = r.b_[k - 1];
    r.b_[pos] = nb;
    ++r.nb_;
    return r;
}

FockMonomial FockMonomial::without_boson(int k) const {
    FockMonomial r = *this;
    for (int i = k; i + 1 < r.nb_; ++i) r.b_[i] = r.b_[i + 1];
    --r.nb_;
    r.b_[r.nb_] = Boson{};
    return r;
}

FockMonomial FockMonomial::with_point(const LatticeVector& p) const {
    FockMonomial r = *this;
    r.p_ = Point::from(p);
    return r;
}

int FockMonomial::multiplicity(int dir, int mode) const {
    int c = 0;
    for (int k = 0; k < nb_; ++k)
        if (b_[k].dir == dir && b_[k].mode == mode) ++c;
    return c;
}

long long FockMonomial::boson_weight() const {
    long long w = 0;
    for (int k = 0; k < nb_; ++k) w -= b_[k].mode;
    return w;
}

Rat FockMonomial::weight() const { return Rat(boson_weight()) + p_.half_norm(); }

bool operator==(const FockMonomial& a, const FockMonomial& b) {
    if (a.nb_ != b.nb_ || !(a.p_ == b.p_)) return false;
    for (int k = 0; k < a.nb_; ++k)
        if (!(a.b_[k] == b.b_[k])) return false;
    return true;
}

bool operator<(const FockMonomial& a, const FockMonomial& b) {
    if (a.nb_ != b.nb_) return a.nb_ < b.nb_;
    for (int k = 0; k < a.nb_; ++k)
        if (!(a.b_[k] == b.b_[k])) return a.b_[k] < b.b_[k];
    return a.p_ < b.p_;
}

std::string FockMonomial::str() const {
    std::string out;
    int k = 0;
    while (k < nb_) {
        int run = 1;
        while (k + run < nb_ && b_[k + run] == b_[k]) ++run;
        if (!out.empty()) out += " ";
        out += "a" + std::to_string(b_[k].dir + 1) + "(" + std::to_string(b_[k].mode) + ")";
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    if (!out.empty()) out += " ";
    out += "e" + p_.vec().str();
    return out;
}

FockMonomial FockMonomial::parse(std::string_view s) {
    FockMonomial m;
    std::istringstream in{std::string(s)};
    std::string tok;
    bool saw_point = false;
    while (in >> tok) {
        if (saw_point) throw parse_error("FockMonomial: tokens after the lattice point");
        if (tok[0] == 'a') {
            auto lp = tok.find('(');
            auto rp = tok.find(')');
            if (lp == std::string::npos || rp == std::string::npos || rp < lp)
                throw parse_error("FockMonomial: bad oscillator '" + tok + "'");
            int dir = std::stoi(tok.substr(1, lp - 1)) - 1;
            int mode = std::stoi(tok.substr(lp + 1, rp - lp - 1));
            int rep = 1;
            if (rp + 1 < tok.size()) {
                if (tok[rp + 1] != '^')
                    throw parse_error("FockMonomial: bad oscillator suffix '" + tok + "'");
                rep = std::stoi(tok.substr(rp + 2));
            }
            if (dir < 0 || dir > 2)
                throw parse_error("FockMonomial: oscillator direction out of range");
            for (int i = 0; i < rep; ++i) m = m.with_boson(dir, mode);
        } else if (tok[0] == 'e') {
            m.p_ = Point::from(LatticeVector::parse(tok.substr(1)));
            saw_point = true;
        } else {
            throw parse_error("FockMonomial: unexpected token '" + tok + "'");
        }
    }
    if (!saw_point) throw parse_error("FockMonomial: missing lattice point e[..]");
    return m;
}

void FockElement::add_term(const FockMonomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rat FockElement::coeff(const FockMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

FockElement operator+(const FockElement& a, const FockElement& b) {
    FockElement r = a;
    r += b;
    return r;
}

FockElement operator-(const FockElement& a, const FockElement& b) {
    FockElement r = a;
    r -= b;
    return r;
}

FockElement& FockElement::operator+=(const FockElement& b) {
    for (const auto& [m, c] : b.t_) add_term(m, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& b) {
    for (const auto& [m, c] : b.t_) add_term(m, -c);
    return *this;
}

FockElement FockElement::scaled(const Rat& c) const {
    FockElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
    return r;
}

std::optional<Rat> FockElement::homogeneous_weight() const {
    if (t_.empty()) return Rat(0);
    Rat w = t_.begin()->first.weight();
    for (const auto& [m, c] : t_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

std::string FockElement::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        out += c.str() + " * " + m.str() + "\n";
    }
    return out;
}

FockElement FockElement::parse(std::string_view text) {
    FockElement r;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (line == "0") continue;
        auto star = line.find('*');
        if (star == std::string_view::npos)
            throw parse_error("FockElement: expected 'coeff * monomial'");
        std::string_view head = line.substr(0, star);
        while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
        r.add_term(FockMonomial::parse(line.substr(star + 1)), Rat::parse(head));
    }
    return r;
}

// --- graded bases ---------------------------------------------------------

std::vector<LatticeVector> oscillator_frame(const Coset& c) {
    if (c.lattice().rank() == 3)
        return {LatticeVector::alpha(1), LatticeVector::alpha(2), LatticeVector::alpha(3)};
    return c.lattice().basis();
}

namespace {

// Boson multisets over r directions with total weight <= budget, appended to
// `base` in canonical ascending order.
void enumerate_bosons(const FockMonomial& base, int r, long long budget, int min_dir,
                      int min_mode, std::vector<FockMonomial>& out) {
    out.push_back(base);
    for (int dir = min_dir; dir < r; ++dir) {
        int start = (dir == min_dir) ? min_mode : -1;
        for (int mode = start; -mode <= budget; --mode) {
            enumerate_bosons(base.with_boson(dir, mode), r, budget + mode, dir, mode, out);
        }
    }
}

}  // namespace

std::vector<FockMonomial> fock_basis(const Coset& c, const Rat& max_weight) {
    std::vector<FockMonomial> out;
    if (max_weight < Rat(0)) return out;
    const int r = c.lattice().rank();
    for (const auto& x : coset_points(c, Rat(2) * max_weight)) {
        FockMonomial ground = FockMonomial::lattice_point(x);
        Rat budget = max_weight - ground.weight();
        enumerate_bosons(ground, r, budget.floor(), 0, -1, out);
    }
    std::sort(out.begin(), out.end(), [](const FockMonomial& a, const FockMonomial& b) {
        Rat wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

long long graded_dim(const Coset& c, const Rat& weight) {
    long long n = 0;
    for (const auto& m : fock_basis(c, weight))
        if (m.weight() == weight) ++n;
    return n;
}

FockElement expand_monomial(const FockMonomial& m, const std::vector<LatticeVector>& frame) {
    FockElement r(FockMonomial::lattice_point(m.point_vec()));
    for (int k = 0; k < m.boson_count(); ++k) {
        const Boson& bo = m.boson(k);
        const LatticeVector& d = frame.at(bo.dir);
        FockElement next;
        for (const auto& [mono, c] : r.terms()) {
            for (int j = 0; j < 3; ++j) {
                if (d[j].is_zero()) continue;
                next.add_term(mono.with_boson(j, bo.mode), c * d[j]);
            }
        }
        r = std::move(next);
    }
    return r;
}

// --- tensor view -----------------------------------------------------------

TensorTriple tensor_split(const FockMonomial& m) {
    if (!m.point().is_integral())
        throw std::invalid_argument("tensor_split: point outside L");
    TensorTriple t;
    for (int i = 0; i < 3; ++i) t[i].charge = m.point().n[i];
    for (int k = 0; k < m.boson_count(); ++k)
        t[m.boson(k).dir].modes.push_back(m.boson(k).mode);
    for (auto& f : t) std::sort(f.modes.begin(), f.modes.end());
    return t;
}

FockMonomial tensor_merge(const TensorTriple& t) {
    LatticeVector p(Rat(t[0].charge), Rat(t[1].charge), Rat(t[2].charge));
    FockMonomial m = FockMonomial::lattice_point(p);
    for (int i = 0; i < 3; ++i)
        for (int8_t mode : t[i].modes) m = m.with_boson(i, mode);
    return m;
}

FockElement oscillator_square(const LatticeVector& x) {
    FockElement r;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            Rat c = x[i] * x[j];
            if (i != j) c *= Rat(2);
            if (c.is_zero()) continue;
            r.add_term(FockMonomial().with_boson(i, -1).with_boson(j, -1), c);
        }
    return r;
}

FockElement tensor_combine(const std::array<FockElement, 3>& factors) {
    FockElement r = FockElement::vacuum();
    for (int i = 0; i < 3; ++i) {
        FockElement next;
        for (const auto& [ma, ca] : r.terms()) {
            for (const auto& [mb, cb] : factors[i].terms()) {
                // mb must be supported on factor i
                FockMonomial merged = ma;
                for (int k = 0; k < mb.boson_count(); ++k) {
                    if (mb.boson(k).dir != i)
                        throw std::invalid_argument(
                            "tensor_combine: factor supported on wrong direction");
                    merged = merged.with_boson(mb.boson(k).dir, mb.boson(k).mode);
                }
                if (!mb.point().coord((i + 1) % 3).is_zero() ||
                    !mb.point().coord((i + 2) % 3).is_zero())
                    throw std::invalid_argument(
                        "tensor_combine: factor point on wrong direction");
                merged = merged.with_point(merged.point_vec() + mb.point_vec());
                next.add_term(merged, ca * cb);
            }
        }
        r = std::move(next);
    }
    return r;
}

}  // namespace voa
