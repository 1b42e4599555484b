#include "voa/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace voa {

namespace {

// Solve the r x r system M c = rhs exactly (M invertible).
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
    const int n = static_cast<int>(M.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!M[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw std::domain_error("solve_square: singular matrix");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        Rat inv = M[col][col].inverse();
        for (int j = col; j < n; ++j) M[col][j] *= inv;
        rhs[col] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || M[row][col].is_zero()) continue;
            Rat f = M[row][col];
            for (int j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

Rat det3(const std::vector<LatticeVector>& b) {
    return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
           b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
           b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

LatticeVector LatticeVector::alpha(int i) {
    LatticeVector v;
    if (i < 1 || i > 3) throw std::invalid_argument("alpha index out of range");
    v[i - 1] = Rat(1);
    return v;
}

bool LatticeVector::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

bool LatticeVector::is_integral() const {
    return c_[0].is_integer() && c_[1].is_integer() && c_[2].is_integer();
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
}

LatticeVector LatticeVector::operator-() const {
    return {-c_[0], -c_[1], -c_[2]};
}

LatticeVector LatticeVector::scaled(const Rat& c) const {
    return {c_[0] * c, c_[1] * c, c_[2] * c};
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.c_ == b.c_;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
    for (int i = 0; i < 3; ++i) {
        if (a.c_[i] < b.c_[i]) return true;
        if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
}

std::string LatticeVector::str() const {
    return "[" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "]";
}

LatticeVector LatticeVector::parse(std::string_view s) {
    s = strip(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("LatticeVector: expected [..,..,..]");
    s = s.substr(1, s.size() - 2);
    LatticeVector v;
    int idx = 0;
    while (idx < 3) {
        auto comma = s.find(',');
        std::string_view part = (comma == std::string_view::npos) ? s : s.substr(0, comma);
        v[idx] = Rat::parse(strip(part));
        ++idx;
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (idx != 3) throw parse_error("LatticeVector: expected three coordinates");
    return v;
}

Rat gram(const LatticeVector& u, const LatticeVector& v) {
    Rat s(0);
    for (int i = 0; i < 3; ++i) s += u[i] * v[i];
    return Rat(2) * s;
}

LatticeVector sqrt2_beta(int i) {
    switch (i) {
        case 1: return LatticeVector(Rat(1), Rat(1), Rat(0));
        case 2: return LatticeVector(Rat(0), Rat(-1), Rat(1));
        case 3: return LatticeVector(Rat(-1), Rat(1), Rat(0));
    }
    throw std::invalid_argument("sqrt2_beta index out of range");
}

LatticeVector gamma_vec() { return LatticeVector(Rat(-1), Rat(1), Rat(1)); }

Lattice::Lattice(std::vector<LatticeVector> basis, std::string name)
    : basis_(std::move(basis)), name_(std::move(name)) {
    if (basis_.empty() || basis_.size() > 3)
        throw std::invalid_argument("Lattice: rank must be 1..3");
    auto G = gram_matrix();
    // Invert G; failure means the basis is linearly dependent.
    const int r = rank();
    gram_inv_.assign(r, std::vector<Rat>(r));
    for (int j = 0; j < r; ++j) {
        std::vector<Rat> e(r, Rat(0));
        e[j] = Rat(1);
        std::vector<Rat> col;
        try {
            col = solve_square(G, e);
        } catch (const std::domain_error&) {
            throw std::invalid_argument("Lattice: basis vectors linearly dependent");
        }
        for (int i = 0; i < r; ++i) gram_inv_[i][j] = col[i];
    }
}

std::vector<std::vector<Rat>> Lattice::gram_matrix() const {
    const int r = rank();
    std::vector<std::vector<Rat>> G(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) G[i][j] = gram(basis_[i], basis_[j]);
    return G;
}

std::optional<std::vector<Rat>> Lattice::coordinates(const LatticeVector& x) const {
    const int r = rank();
    std::vector<Rat> rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = gram(x, basis_[i]);
    std::vector<Rat> c(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c[i] += gram_inv_[i][j] * rhs[j];
    // Reconstruct to reject vectors outside the rational span.
    LatticeVector rec;
    for (int i = 0; i < r; ++i) rec = rec + basis_[i].scaled(c[i]);
    if (!(rec == x)) return std::nullopt;
    return c;
}

bool Lattice::contains(const LatticeVector& x) const {
    auto c = coordinates(x);
    if (!c) return false;
    for (const Rat& v : *c)
        if (!v.is_integer()) return false;
    return true;
}

bool Lattice::is_sublattice_of(const Lattice& M) const {
    for (const auto& b : basis_)
        if (!M.contains(b)) return false;
    return true;
}

std::string Lattice::str() const {
    std::string out = "lattice rank=" + std::to_string(rank()) + " basis=[";
    for (int i = 0; i < rank(); ++i) {
        if (i) out += ",";
        out += basis_[i].str();
    }
    out += "]";
    return out;
}

Lattice Lattice::parse(std::string_view line) {
    line = strip(line);
    constexpr std::string_view prefix = "lattice rank=";
    if (line.substr(0, prefix.size()) != prefix)
        throw parse_error("Lattice: expected 'lattice rank=...'");
    line.remove_prefix(prefix.size());
    auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw parse_error("Lattice: missing basis");
    int r = std::stoi(std::string(line.substr(0, sp)));
    line.remove_prefix(sp + 1);
    constexpr std::string_view bprefix = "basis=[";
    if (line.substr(0, bprefix.size()) != bprefix || line.back() != ']')
        throw parse_error("Lattice: expected basis=[[..],..]");
    line.remove_prefix(bprefix.size());
    line.remove_suffix(1);
    std::vector<LatticeVector> basis;
    while (!line.empty()) {
        auto close = line.find(']');
        if (close == std::string_view::npos) throw parse_error("Lattice: unbalanced basis");
        basis.push_back(LatticeVector::parse(line.substr(0, close + 1)));
        line.remove_prefix(close + 1);
        if (!line.empty() && line.front() == ',') line.remove_prefix(1);
    }
    if (static_cast<int>(basis.size()) != r)
        throw parse_error("Lattice: rank and basis size disagree");
    return Lattice(std::move(basis));
}

Coset Coset::parse(std::string_view line, const Lattice& lattice) {
    line = strip(line);
    constexpr std::string_view prefix = "coset shift=";
    if (line.substr(0, prefix.size()) != prefix)
        throw parse_error("Coset: expected 'coset shift=[...]'");
    return Coset(lattice, LatticeVector::parse(line.substr(prefix.size())));
}

const Lattice& build_named(const std::string& name) {
    static const std::map<std::string, Lattice> named = [] {
        std::map<std::string, Lattice> m;
        auto a1 = LatticeVector::alpha(1), a2 = LatticeVector::alpha(2),
             a3 = LatticeVector::alpha(3);
        m.emplace("L", Lattice({a1, a2, a3}, "L"));
        m.emplace("N", Lattice({sqrt2_beta(1), sqrt2_beta(2), sqrt2_beta(3)}, "N"));
        m.emplace("E", Lattice({sqrt2_beta(1), sqrt2_beta(2)}, "E"));
        m.emplace("F", Lattice({gamma_vec()}, "F"));
        m.emplace("D", Lattice({sqrt2_beta(1), sqrt2_beta(2), gamma_vec()}, "D"));
        return m;
    }();
    auto it = named.find(name);
    if (it == named.end())
        throw std::invalid_argument("build_named: unknown lattice '" + name + "'");
    return it->second;
}

bool membership(const LatticeVector& x, const Lattice& M) {
    bool by_solve = M.contains(x);
    if (M.name() == "N" && x.is_integral()) {
        // <a1+a2+a3, x> = 0 (mod 4), checked against the basis solve.
        LatticeVector s(Rat(1), Rat(1), Rat(1));
        Rat ip = gram(s, x);
        bool by_congruence = (ip.num() % 4 + 4) % 4 == 0;
        if (by_congruence != by_solve)
            throw std::logic_error("membership: congruence and basis solve disagree at " +
                                   x.str());
    }
    return by_solve;
}

Coset::Coset(Lattice lattice, LatticeVector shift)
    : lat_(std::move(lattice)), shift_(std::move(shift)) {
    canonicalize();
}

bool Coset::contains(const LatticeVector& x) const { return lat_.contains(x - shift_); }

bool Coset::operator==(const Coset& o) const {
    if (lat_.rank() != o.lat_.rank()) return false;
    if (!(lat_.is_sublattice_of(o.lat_) && o.lat_.is_sublattice_of(lat_))) return false;
    return lat_.contains(shift_ - o.shift_);
}

std::string Coset::str() const { return "coset shift=" + shift_.str(); }

void Coset::canonicalize() {
    bool integral_basis = true;
    for (const auto& b : lat_.basis())
        if (!b.is_integral()) integral_basis = false;

    if (lat_.rank() == 3 && integral_basis) {
        // d Z^3 lies inside the lattice for d = |det basis|, so every coset
        // meets [0,d)^3 and the lexicographically smallest representative
        // with nonnegative coordinates is found by folding.
        Rat d = det3(lat_.basis()).abs();
        long long dd = d.num();  // integral for an integral basis
        if (dd <= 0) throw std::logic_error("Coset: degenerate lattice");
        auto fold = [&](const LatticeVector& v) {
            LatticeVector out;
            for (int i = 0; i < 3; ++i) {
                Rat q((v[i] / Rat(dd)).floor());
                out[i] = v[i] - Rat(dd) * q;
            }
            return out;
        };
        std::optional<LatticeVector> best;
        LatticeVector cand;
        for (long long c0 = 0; c0 < dd; ++c0)
            for (long long c1 = 0; c1 < dd; ++c1)
                for (long long c2 = 0; c2 < dd; ++c2) {
                    cand = fold(shift_ + lat_.basis()[0].scaled(Rat(c0)) +
                                lat_.basis()[1].scaled(Rat(c1)) +
                                lat_.basis()[2].scaled(Rat(c2)));
                    if (!best || cand < *best) best = cand;
                }
        shift_ = *best;
        return;
    }

    // Lower-rank cosets may have no nonnegative representative at all; take
    // the (norm, lex)-smallest point instead.
    Rat bound = norm(shift_);
    std::vector<LatticeVector> pts = coset_points(*this, bound);
    if (pts.empty()) throw std::logic_error("Coset: canonical search found nothing");
    shift_ = pts.front();
}

std::vector<Coset> coset_decompose(const Lattice& M, const Lattice& S) {
    if (!S.is_sublattice_of(M))
        throw std::invalid_argument("coset_decompose: S is not a sublattice of M");
    if (S.rank() != M.rank())
        throw std::invalid_argument("coset_decompose: infinite index");
    // Index = |det| of S's basis written in M's basis.
    const int r = M.rank();
    std::vector<std::vector<Rat>> C(r);
    for (int i = 0; i < r; ++i) C[i] = *M.coordinates(S.basis()[i]);
    Rat det(1);
    {
        // Fraction-free elimination is unnecessary at rank <= 3.
        auto A = C;
        Rat sign(1);
        for (int col = 0; col < r; ++col) {
            int piv = -1;
            for (int row = col; row < r; ++row)
                if (!A[row][col].is_zero()) { piv = row; break; }
            if (piv < 0) throw std::invalid_argument("coset_decompose: singular index matrix");
            if (piv != col) { std::swap(A[piv], A[col]); sign = -sign; }
            for (int row = col + 1; row < r; ++row) {
                Rat f = A[row][col] / A[col][col];
                for (int j = col; j < r; ++j) A[row][j] -= f * A[col][j];
            }
        }
        for (int i = 0; i < r; ++i) det *= A[i][i];
        det = (det * sign).abs();
    }
    long long index = det.num();
    if (!det.is_integer() || index <= 0)
        throw std::logic_error("coset_decompose: non-integral index");

    std::vector<LatticeVector> reps{LatticeVector()};
    auto known = [&](const LatticeVector& v) {
        for (const auto& r0 : reps)
            if (S.contains(v - r0)) return true;
        return false;
    };
    for (size_t head = 0; head < reps.size() && reps.size() < static_cast<size_t>(index);
         ++head) {
        for (const auto& g : M.basis()) {
            for (const auto& cand : {reps[head] + g, reps[head] - g}) {
                if (!known(cand)) {
                    reps.push_back(cand);
                    if (reps.size() == static_cast<size_t>(index)) break;
                }
            }
            if (reps.size() == static_cast<size_t>(index)) break;
        }
    }
    if (reps.size() != static_cast<size_t>(index))
        throw std::logic_error("coset_decompose: enumeration did not reach the index");

    std::vector<Coset> out;
    out.reserve(reps.size());
    for (auto& rep : reps) out.emplace_back(S, rep);
    std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) {
        return a.shift() < b.shift();
    });
    return out;
}

std::pair<Coset, Coset> orthogonal_split(const Coset& c) {
    const Lattice& D = build_named("D");
    const Lattice& E = build_named("E");
    const Lattice& F = build_named("F");
    LatticeVector a2 = LatticeVector::alpha(2);
    Coset plus(D, a2), minus(D, -a2);
    bool is_plus = (c == plus), is_minus = (c == minus);
    if (!is_plus && !is_minus)
        throw std::invalid_argument("orthogonal_split: coset is not D+-a2");
    LatticeVector s = is_plus ? a2 : -a2;
    LatticeVector g = gamma_vec();
    LatticeVector f_part = g.scaled(gram(s, g) / gram(g, g));
    LatticeVector e_part = s - f_part;
    if (!(e_part + f_part == s) || !gram(e_part, f_part).is_zero())
        throw std::logic_error("orthogonal_split: projection failed");
    return {Coset(E, e_part), Coset(F, f_part)};
}

std::vector<LatticeVector> coset_points(const Coset& c, const Rat& max_norm) {
    std::vector<LatticeVector> out;
    if (max_norm < Rat(0)) return out;
    // <x,x> = 2 sum x_i^2 <= max_norm bounds |x_i| by sqrt(max_norm/2).
    long long s = 0;
    while (Rat(s * s) < max_norm / Rat(2)) ++s;
    long long bound = s + 1;
    const LatticeVector& sh = c.shift();
    long long lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
        lo[i] = (Rat(-bound) - sh[i]).ceil();
        hi[i] = (Rat(bound) - sh[i]).floor();
    }
    for (long long k0 = lo[0]; k0 <= hi[0]; ++k0)
        for (long long k1 = lo[1]; k1 <= hi[1]; ++k1)
            for (long long k2 = lo[2]; k2 <= hi[2]; ++k2) {
                LatticeVector k{Rat(k0), Rat(k1), Rat(k2)};
                LatticeVector x = sh + k;
                if (norm(x) > max_norm) continue;
                if (!c.lattice().contains(k)) continue;
                out.push_back(x);
            }
    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        Rat na = norm(a), nb = norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return out;
}

QSeries theta_series(const Coset& c, const Rat& order, long long denom) {
    QSeries th(denom, order);
    for (const auto& x : coset_points(c, Rat(2) * order))
        th.add_coeff(norm(x) / Rat(2), Rat(1));
    return th;
}

QSeries theta_series(const Lattice& M, const Rat& order, long long denom) {
    return theta_series(Coset(M, LatticeVector()), order, denom);
}

}  // namespace voa
