#include "voa/vertex.hpp"

#include <mutex>
#include <vector>

namespace voa {

namespace {

void check_grading(const char* op, const std::optional<Rat>& wu,
                   const std::optional<Rat>& wv, long long n, const FockElement& r) {
    if (!wu || !wv) return;
    auto wr = r.homogeneous_weight();
    if (r.is_zero()) return;
    if (!wr || *wr != *wu + *wv - Rat(n) - Rat(1))
        throw std::logic_error(std::string(op) + ": grading violated, wt(u)=" + wu->str() +
                               " wt(v)=" + wv->str() + " n=" + std::to_string(n));
}

// a_dir(n), n > 0, on a monomial: sum over matching oscillators of
// 2n * (monomial with one a_dir(-n) removed).
void annihilate(int dir, int n, const FockMonomial& m, const Rat& c,
                std::map<FockMonomial, Rat>& out) {
    int mult = m.multiplicity(dir, -n);
    if (mult == 0) return;
    for (int k = 0; k < m.boson_count(); ++k) {
        if (m.boson(k).dir == dir && m.boson(k).mode == -n) {
            Rat v = c * Rat(mult) * Rat(2 * n);
            auto r = m.without_boson(k);
            auto [it, fresh] = out.try_emplace(r, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
            return;
        }
    }
}

// One annihilation step on a single monomial; the result is again a single
// (monomial, coeff) or zero. Returns false when annihilated to zero.
bool heis_step_mono(int dir, int n, FockMonomial& m, Rat& c) {
    if (n < 0) {
        m = m.with_boson(dir, n);
        return true;
    }
    if (n == 0) {
        Rat ip = Rat(2) * m.point().coord(dir);
        if (ip.is_zero()) return false;
        c *= ip;
        return true;
    }
    int mult = m.multiplicity(dir, -n);
    if (mult == 0) return false;
    for (int k = 0; k < m.boson_count(); ++k)
        if (m.boson(k).dir == dir && m.boson(k).mode == -n) {
            m = m.without_boson(k);
            break;
        }
    c *= Rat(mult) * Rat(2 * n);
    return true;
}

// E^-(beta, z) coefficient of z^b: a sum over oscillator multisets of weight
// b in the directions of beta,
//   sum_M prod_{(j,-n), mult k} (beta_j / n)^k / k! * (osc multiset M).
struct EminusTerm {
    Rat coeff;
    std::vector<Boson> bosons;
};

void build_eminus(const Point& beta, long long b, std::vector<EminusTerm>& out) {
    LatticeVector bv = beta.vec();
    // Recursive colored-partition enumeration, canonical (dir asc, mode desc).
    struct Rec {
        const LatticeVector& bv;
        std::vector<EminusTerm>& out;
        EminusTerm cur;
        void go(long long rem, int min_dir, int min_n) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            for (int dir = min_dir; dir < 3; ++dir) {
                if (bv[dir].is_zero()) continue;
                for (long long n = (dir == min_dir ? min_n : 1); n <= rem; ++n) {
                    // multiplicity handled by the 1/k! accumulated stepwise:
                    // adding the j-th copy multiplies by (beta_dir/n)/j.
                    int already = 0;
                    for (const auto& bo : cur.bosons)
                        if (bo.dir == dir && bo.mode == -n) ++already;
                    Rat f = (bv[dir] / Rat(n)) / Rat(already + 1);
                    cur.bosons.push_back(Boson{static_cast<int8_t>(dir),
                                               static_cast<int8_t>(-n)});
                    Rat keep = cur.coeff;
                    cur.coeff *= f;
                    go(rem - n, dir, static_cast<int>(n));
                    cur.bosons.pop_back();
                    cur.coeff = keep;
                }
            }
        }
    };
    Rec rec{bv, out, EminusTerm{Rat(1), {}}};
    rec.go(b, 0, 1);
}

const std::vector<EminusTerm>& eminus_table(const Point& beta, long long b) {
    static std::map<std::pair<Point, long long>, std::vector<EminusTerm>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(beta, b);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<EminusTerm> terms;
        build_eminus(beta, b, terms);
        it = cache.emplace(key, std::move(terms)).first;
    }
    return it->second;
}

void add_to(std::map<FockMonomial, Rat>& out, const FockMonomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

// E^+(beta,z) annihilation at total degree a applied to a monomial:
// coefficient of z^{-a}, i.e. sum over partitions of a of products
// prod (beta(n)/(-n))^k / k!. Results fan out over which oscillators match.
void apply_eplus(const Point& beta, long long a, const FockMonomial& m, const Rat& c,
                 std::map<FockMonomial, Rat>& out) {
    if (a == 0) {
        add_to(out, m, c);
        return;
    }
    LatticeVector bv = beta.vec();
    // beta(n) for n = smallest part: recurse over how партition starts.
    // Enumerate the largest part n and its single application, tracking the
    // stepwise 1/(k!) with a per-part division like build_eminus. To keep the
    // canonical single-counting we apply parts in non-increasing order and
    // divide by the running multiplicity.
    struct Rec {
        const LatticeVector& bv;
        std::map<FockMonomial, Rat>& out;
        void go(long long rem, long long max_n, int mult_of_max, const FockMonomial& m,
                const Rat& c) {
            if (rem == 0) {
                add_to(out, m, c);
                return;
            }
            for (long long n = std::min(rem, max_n); n >= 1; --n) {
                int j = (n == max_n) ? mult_of_max + 1 : 1;
                // beta(n) = sum_dir beta_dir a_dir(n); apply one annihilator.
                for (int dir = 0; dir < 3; ++dir) {
                    if (bv[dir].is_zero()) continue;
                    int mult = m.multiplicity(dir, static_cast<int>(-n));
                    if (mult == 0) continue;
                    FockMonomial r = m;
                    Rat rc = c;
                    if (!heis_step_mono(dir, static_cast<int>(n), r, rc)) continue;
                    rc *= bv[dir] / Rat(-n) / Rat(j);
                    go(rem - n, n, j, r, rc);
                }
            }
        }
    };
    Rec rec{bv, out};
    rec.go(a, a, 0, m, c);
}

}  // namespace

FockElement heis_mode(int dir, int n, const FockElement& v) {
    if (dir < 0 || dir > 2) throw std::invalid_argument("heis_mode: direction out of range");
    FockElement r;
    std::map<FockMonomial, Rat> acc;
    for (const auto& [m, c] : v.terms()) {
        FockMonomial mm = m;
        Rat cc = c;
        if (n > 0) {
            annihilate(dir, n, m, c, acc);
        } else if (heis_step_mono(dir, n, mm, cc)) {
            add_to(acc, mm, cc);
        }
    }
    for (auto& [m, c] : acc) r.add_term(m, c);
    check_grading("heis_mode", Rat(1), v.homogeneous_weight(), n, r);
    return r;
}

FockElement exp_mode(const LatticeVector& beta, long long n, const FockElement& v) {
    if (!beta.is_integral())
        throw std::invalid_argument("exp_mode: beta must lie in the ambient lattice");
    std::map<FockMonomial, Rat> acc;
    FockMonomial u = FockMonomial::lattice_point(beta);
    for (const auto& [m, c] : v.terms()) vertex_mode_accumulate(u, n, m, c, acc);
    FockElement r;
    for (auto& [m, c] : acc) r.add_term(m, c);
    check_grading("exp_mode", norm(beta) / Rat(2), v.homogeneous_weight(), n, r);
    return r;
}

void vertex_mode_accumulate(const FockMonomial& u, long long n, const FockMonomial& v,
                            const Rat& coeff, std::map<FockMonomial, Rat>& out) {
    LatticeVector beta = u.point_vec();
    Point bp = u.point();
    Rat wres = u.weight() + v.weight() - Rat(n) - Rat(1);
    if (wres < Rat(0)) return;
    long long wres_floor = wres.floor();

    // Recurse over the Heisenberg modes m_j assigned to the k oscillator
    // factors of u; annihilation applies immediately (monomial -> monomial),
    // creations are deferred until after the exponential part.
    struct Rec {
        const FockMonomial& u;
        long long n;
        Point bp;
        LatticeVector beta;
        long long wres_floor;
        std::map<FockMonomial, Rat>& out;
        std::vector<Boson> pending;

        void leaf(const FockMonomial& state, const Rat& c, long long mode_sum) {
            long long m0 = n - mode_sum;
            // exponential factor: coefficient of z^{-m0-1} of Y(e^beta,z)
            std::map<FockMonomial, Rat> local;
            if (bp.is_zero()) {
                if (m0 != -1) return;
                local.emplace(state, c);
            } else {
                Rat zp = gram(beta, state.point_vec());
                if (!zp.is_integer())
                    throw std::invalid_argument(
                        "vertex_mode: <beta, point> not integral (invalid module pairing)");
                long long zpow = zp.num();
                long long bw = state.boson_weight();
                for (long long a = 0; a <= bw; ++a) {
                    long long b = a - zpow - m0 - 1;
                    if (b < 0) continue;
                    std::map<FockMonomial, Rat> mid;
                    apply_eplus(bp, a, state, c, mid);
                    if (mid.empty()) continue;
                    const auto& em = eminus_table(bp, b);
                    for (const auto& [mm, cc] : mid) {
                        FockMonomial base = mm.with_point(mm.point_vec() + beta);
                        for (const auto& term : em) {
                            FockMonomial r = base;
                            for (const auto& bo : term.bosons)
                                r = r.with_boson(bo.dir, bo.mode);
                            add_to(local, r, cc * term.coeff);
                        }
                    }
                }
            }
            for (const auto& [m0m, c0] : local) {
                FockMonomial r = m0m;
                for (const auto& bo : pending) r = r.with_boson(bo.dir, bo.mode);
                add_to(out, r, c0);
            }
        }

        void go(int j, const FockMonomial& state, const Rat& c, long long mode_sum) {
            if (j == u.boson_count()) {
                leaf(state, c, mode_sum);
                return;
            }
            int dir = u.boson(j).dir;
            int p = -u.boson(j).mode - 1;  // derivative order of the field factor
            // creations: modes m in [-wres_floor, -1]
            for (long long m = -wres_floor; m <= -1; ++m) {
                Rat bc = binomial(-m - 1, p);
                if (bc.is_zero()) continue;
                pending.push_back(Boson{static_cast<int8_t>(dir), static_cast<int8_t>(m)});
                go(j + 1, state, c * bc, mode_sum + m + p + 1);
                pending.pop_back();
            }
            // zero mode: <a_dir, point>
            {
                Rat ip = Rat(2) * state.point().coord(dir);
                Rat bc = binomial(-1, p);
                if (!ip.is_zero() && !bc.is_zero())
                    go(j + 1, state, c * ip * bc, mode_sum + p + 1);
            }
            // annihilation: only modes present in the state
            long long seen = -1;
            for (int t = 0; t < state.boson_count(); ++t) {
                if (state.boson(t).dir != dir) continue;
                long long m = -state.boson(t).mode;
                if (m == seen) continue;
                seen = m;
                Rat bc = binomial(-m - 1, p);
                if (bc.is_zero()) continue;
                FockMonomial s2 = state;
                Rat c2 = c;
                if (!heis_step_mono(dir, static_cast<int>(m), s2, c2)) continue;
                go(j + 1, s2, c2 * bc, mode_sum + m + p + 1);
            }
        }
    };

    Rec rec{u, n, bp, beta, wres_floor, out, {}};
    rec.go(0, v, coeff, 0);
}

FockElement vertex_mode(const FockElement& u, long long n, const FockElement& v) {
    std::map<FockMonomial, Rat> acc;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms()) vertex_mode_accumulate(mu, n, mv, cu * cv, acc);
    FockElement r;
    for (auto& [m, c] : acc) r.add_term(m, c);
    check_grading("vertex_mode", u.homogeneous_weight(), v.homogeneous_weight(), n, r);
    return r;
}

FockElement lie_bracket(const FockElement& u, const FockElement& v) {
    auto wu = u.homogeneous_weight(), wv = v.homogeneous_weight();
    if (!wu || *wu != Rat(1) || !wv || *wv != Rat(1))
        throw std::invalid_argument("lie_bracket: inputs must be homogeneous of weight 1");
    return vertex_mode(u, 0, v);
}

Rat pairing(const FockElement& u, const FockElement& v) {
    auto wu = u.homogeneous_weight(), wv = v.homogeneous_weight();
    if (!wu || *wu != Rat(1) || !wv || *wv != Rat(1))
        throw std::invalid_argument("pairing: inputs must be homogeneous of weight 1");
    FockElement r = vertex_mode(u, 1, v);
    if (r.is_zero()) return Rat(0);
    if (r.size() != 1 || !(r.terms().begin()->first == FockMonomial()))
        throw std::logic_error("pairing: u_1 v is not a multiple of the vacuum");
    return r.terms().begin()->second;
}

}  // namespace voa
