#include "voa/modeaction.hpp"

#include "voa/parallel.hpp"

namespace voa {

ModeAction::ModeAction(FockElement v, Coset space, long long max_weight)
    : v_(std::move(v)), space_(std::move(space)), maxw_(max_weight) {
    auto wv = v_.homogeneous_weight();
    if (!wv) throw std::invalid_argument("ModeAction: vector must be homogeneous");
    blocks_.assign(maxw_ + 1, {});
    index_.assign(maxw_ + 1, {});
    for (auto& m : fock_basis(space_, Rat(maxw_))) {
        Rat w = m.weight();
        if (!w.is_integer())
            throw std::invalid_argument("ModeAction: non-integral grading");
        auto& blk = blocks_[w.num()];
        index_[w.num()].emplace(m, static_cast<int>(blk.size()));
        blk.push_back(m);
    }
}

const std::vector<FockMonomial>& ModeAction::block(long long w) const {
    static const std::vector<FockMonomial> empty;
    if (w < 0 || w > maxw_) return empty;
    return blocks_[w];
}

long long ModeAction::dim(long long w) const {
    return static_cast<long long>(block(w).size());
}

const std::vector<SparseVec>& ModeAction::assemble(int m, long long w) {
    auto key = std::make_pair(m, w);
    auto it = cols_.find(key);
    if (it != cols_.end()) return it->second;

    const auto& src = block(w);
    long long wt = w - m;
    std::vector<SparseVec> cols(src.size());
    const std::map<FockMonomial, int>* tgt_index =
        (wt >= 0 && wt <= maxw_) ? &index_[wt] : nullptr;
    parallel_for(src.size(), [&](std::size_t j) {
        std::map<FockMonomial, Rat> acc;
        for (const auto& [mu, cu] : v_.terms())
            vertex_mode_accumulate(mu, m + 1, src[j], cu, acc);
        SparseVec col;
        col.reserve(acc.size());
        for (const auto& [mono, c] : acc) {
            if (wt < 0)
                throw std::logic_error("ModeAction: nonzero image below weight 0");
            if (!tgt_index)
                throw std::logic_error("ModeAction: image beyond tracked weight range");
            auto f = tgt_index->find(mono);
            if (f == tgt_index->end())
                throw std::logic_error("ModeAction: image leaves the space at " +
                                       mono.str());
            col.emplace_back(f->second, c);
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cols[j] = std::move(col);
    });
    return cols_.emplace(key, std::move(cols)).first->second;
}

const SparseVec& ModeAction::column(int m, long long w, int idx) {
    return assemble(m, w)[idx];
}

void ModeAction::apply(int m, long long w, const SparseVec& x, const Rat& c,
                       std::vector<Rat>& y, std::vector<int>& touched) {
    if (x.empty() || c.is_zero()) return;
    const auto& cols = assemble(m, w);
    for (const auto& [j, xv] : x) {
        Rat f = c * xv;
        for (const auto& [i, av] : cols[j]) {
            if (y[i].is_zero()) touched.push_back(i);
            y[i] += f * av;
        }
    }
}

}  // namespace voa
