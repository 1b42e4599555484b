#include "voa/conformal.hpp"

#include <algorithm>

#include "voa/modeaction.hpp"
#include "voa/vertex.hpp"

namespace voa {

FockElement w_pm(const LatticeVector& x, int sign) {
    if (norm(x) != Rat(4))
        throw std::invalid_argument("w_pm: not a root (expected <x,x> = 4)");
    if (!membership(x, build_named("N")))
        throw std::invalid_argument("w_pm: sqrt2*root must lie in N");
    if (sign != 1 && sign != -1) throw std::invalid_argument("w_pm: sign must be +-1");
    // beta(-1)^2 = x(-1)^2 / 2.
    FockElement r = oscillator_square(x).scaled(Rat(1, 2));
    r.add_term(FockMonomial::lattice_point(x), Rat(2 * sign));
    r.add_term(FockMonomial::lattice_point(-x), Rat(2 * sign));
    return r;
}

std::vector<LatticeVector> positive_roots(int l) {
    if (l < 1 || l > 3) throw std::invalid_argument("positive_roots: l must be 1..3");
    // Phi_2^+ = {b1, b2, b1+b2}, Phi_3^+ adds {b3, b2+b3, b1+b2+b3}.
    std::vector<LatticeVector> r{sqrt2_beta(1)};
    if (l >= 2) {
        r.push_back(sqrt2_beta(2));
        r.push_back(sqrt2_beta(1) + sqrt2_beta(2));
    }
    if (l == 3) {
        r.push_back(sqrt2_beta(3));
        r.push_back(sqrt2_beta(2) + sqrt2_beta(3));
        r.push_back(sqrt2_beta(1) + sqrt2_beta(2) + sqrt2_beta(3));
    }
    return r;
}

FockElement build_s(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("build_s: i must be 1..3");
    FockElement r;
    for (const auto& x : positive_roots(i)) r += w_pm(x, -1);
    return r.scaled(Rat(1, 2 * (i + 3)));
}

FockElement virasoro_omega() {
    FockElement r;
    for (int i = 0; i < 3; ++i)
        r.add_term(FockMonomial().with_boson(i, -1).with_boson(i, -1), Rat(1, 4));
    return r;
}

FockElement virasoro_omega_E() {
    // 1/(2(l+1)) sum over Phi_2^+ of beta(-1)^2, with beta(-1)^2 = x(-1)^2/2.
    FockElement r;
    for (const auto& x : positive_roots(2)) r += oscillator_square(x).scaled(Rat(1, 2));
    return r.scaled(Rat(1, 6));
}

FockElement build_omega_i(int i) {
    switch (i) {
        case 1: return build_s(1);
        case 2: return build_s(2) - build_s(1);
        case 3: return build_s(3) - build_s(2);
        case 4: return virasoro_omega() - build_s(3);
    }
    throw std::invalid_argument("build_omega_i: i must be 1..4");
}

ConformalSet conformal_set() {
    ConformalSet s;
    for (int i = 1; i <= 4; ++i) {
        s.vectors.push_back(build_omega_i(i));
        s.charges.push_back(central_charge(s.vectors.back()));
    }
    return s;
}

Rat central_charge(const FockElement& v) {
    auto w = v.homogeneous_weight();
    if (!w || *w != Rat(2))
        throw std::invalid_argument("central_charge: input must be homogeneous of weight 2");
    FockElement top = vertex_mode(v, 3, v);
    if (top.is_zero()) return Rat(0);
    if (top.size() != 1 || !(top.terms().begin()->first == FockMonomial()))
        throw std::domain_error("central_charge: v_3 v is not a multiple of the vacuum");
    return Rat(2) * top.terms().begin()->second;
}

Report is_conformal(const FockElement& v, long long W, int M, const std::string& name) {
    Report rep;
    rep.name = "is_conformal(" + name + ")";
    Rat c;
    try {
        c = central_charge(v);
    } catch (const std::exception& e) {
        rep.add(name + ": central charge extraction", false, e.what());
        return rep;
    }

    ModeAction act(v, Coset(build_named("L"), LatticeVector()), W + 2 * M);
    long long violations = 0;
    std::string witness;

    for (long long w = 0; w <= W; ++w) {
        long long dw = act.dim(w);
        for (long long b = 0; b < dw; ++b) {
            for (int m = -M; m <= M; ++m) {
                for (int n = m + 1; n <= M; ++n) {
                    long long wt = w - m - n;
                    if (wt < 0) continue;
                    std::vector<Rat> y(act.dim(wt), Rat(0));
                    std::vector<int> touched;
                    // L(m)L(n) - L(n)L(m)
                    act.apply(m, w - n, act.column(n, w, static_cast<int>(b)), Rat(1), y,
                              touched);
                    act.apply(n, w - m, act.column(m, w, static_cast<int>(b)), Rat(-1), y,
                              touched);
                    // -(m-n) L(m+n)
                    for (const auto& [i, val] : act.column(m + n, w, static_cast<int>(b))) {
                        if (y[i].is_zero()) touched.push_back(i);
                        y[i] -= Rat(m - n) * val;
                    }
                    // central term
                    if (m + n == 0) {
                        long long mm = m;
                        Rat central = Rat(mm * mm * mm - mm) * c / Rat(12);
                        if (y[b].is_zero()) touched.push_back(static_cast<int>(b));
                        y[b] -= central;
                    }
                    std::sort(touched.begin(), touched.end());
                    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
                    for (int i : touched) {
                        if (!y[i].is_zero()) {
                            ++violations;
                            if (witness.empty())
                                witness = "[L(" + std::to_string(m) + "),L(" +
                                          std::to_string(n) + ")] on " +
                                          act.block(w)[b].str();
                            break;
                        }
                    }
                }
            }
        }
    }
    rep.add(name + ": Virasoro relations, c=" + c.str() + ", weight<=" + std::to_string(W) +
                ", modes in [-" + std::to_string(M) + "," + std::to_string(M) + "]",
            violations == 0, violations == 0 ? "" : witness);
    return rep;
}

Report orthogonality(const ConformalSet& set) {
    Report rep;
    rep.name = "orthogonality";
    const int n = static_cast<int>(set.vectors.size());
    for (int i = 0; i < n; ++i) {
        FockElement diag = vertex_mode(set.vectors[i], 1, set.vectors[i]);
        rep.add("(w^" + std::to_string(i + 1) + ")_1 w^" + std::to_string(i + 1) + " = 2 w^" +
                    std::to_string(i + 1),
                diag == set.vectors[i].scaled(Rat(2)));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FockElement off = vertex_mode(set.vectors[i], 1, set.vectors[j]);
            rep.add("(w^" + std::to_string(i + 1) + ")_1 w^" + std::to_string(j + 1) + " = 0",
                    off.is_zero());
        }
    }
    // Recorded, not asserted: the degree-3 products between distinct vectors.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FockElement top = vertex_mode(set.vectors[i], 3, set.vectors[j]);
            std::string val = top.is_zero() ? "0" : top.terms().begin()->second.str();
            rep.add("info: (w^" + std::to_string(i + 1) + ")_3 w^" + std::to_string(j + 1),
                    true, "value " + (top.is_zero() ? std::string("0") : val));
        }
    return rep;
}

Report conformal_suite() {
    Report rep;
    rep.name = "conformal";
    ConformalSet set = conformal_set();
    const Rat expected[4] = {Rat(1, 2), Rat(7, 10), Rat(4, 5), Rat(1)};
    FockElement sum;
    for (int i = 0; i < 4; ++i) {
        const FockElement& wi = set.vectors[i];
        sum += wi;
        rep.add("(w^" + std::to_string(i + 1) + ")_1 w^" + std::to_string(i + 1) + " = 2 w^" +
                    std::to_string(i + 1),
                vertex_mode(wi, 1, wi) == wi.scaled(Rat(2)));
        rep.add("(w^" + std::to_string(i + 1) + ")_2 w^" + std::to_string(i + 1) + " = 0",
                vertex_mode(wi, 2, wi).is_zero());
        rep.add("central charge of w^" + std::to_string(i + 1) + " = " + expected[i].str(),
                set.charges[i] == expected[i], "got " + set.charges[i].str());
        for (int j = 0; j < 4; ++j)
            if (i != j)
                rep.add("(w^" + std::to_string(i + 1) + ")_1 w^" + std::to_string(j + 1) +
                            " = 0",
                        vertex_mode(wi, 1, set.vectors[j]).is_zero());
    }
    rep.add("w^1 + w^2 + w^3 + w^4 = omega", sum == virasoro_omega());
    rep.add("central charge of omega = 3", central_charge(virasoro_omega()) == Rat(3));
    return rep;
}

}  // namespace voa
