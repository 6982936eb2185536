#include "aptrans/corpus.hpp"

namespace aptrans {

std::vector<ClassicalGroup> corpus_groups(const CorpusBounds& b) {
    std::vector<ClassicalGroup> out;
    for (int n = 1; 2 * n + 1 <= b.max_nstar; ++n) out.emplace_back(GroupKind::Sp, n);
    for (int n = 1; 2 * n <= b.max_nstar; ++n) out.emplace_back(GroupKind::SOodd, n);
    for (int n = 1; 2 * n <= b.max_nstar; ++n) out.emplace_back(GroupKind::SOeven, n);
    return out;
}

std::vector<Block> candidate_blocks(const ClassicalGroup& g, const CorpusBounds& b) {
    std::vector<Block> out;
    for (int tt = b.max_twice_t; tt >= 0; --tt) {
        for (int a = b.max_a; a >= 1; --a) {
            for (int eta : {1, -1}) {
                if (tt > 0 && eta < 0) continue;
                const Block blk{HalfInt::from_twice(tt), eta, a, 1};
                if (blk.copy_dim() <= g.nstar() && block_good_parity(g, blk)) out.push_back(blk);
            }
        }
    }
    return out;
}

namespace {

void extend(const ClassicalGroup& g, const std::vector<Block>& cand, std::size_t from, int remaining,
            std::vector<Block>& cur, std::vector<ArthurParameter>& out) {
    if (remaining == 0) {
        out.emplace_back(g, cur);
        return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
        if (cand[i].copy_dim() > remaining) continue;
        cur.push_back(cand[i]);
        extend(g, cand, i, remaining - cand[i].copy_dim(), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ArthurParameter> parameters_for(const ClassicalGroup& g, const CorpusBounds& b) {
    std::vector<ArthurParameter> out;
    std::vector<Block> cur;
    extend(g, candidate_blocks(g, b), 0, g.nstar(), cur, out);
    return out;
}

std::vector<ArthurParameter> parameter_corpus(const CorpusBounds& b) {
    std::vector<ArthurParameter> out;
    for (const auto& g : corpus_groups(b)) {
        auto ps = parameters_for(g, b);
        out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
    }
    return out;
}

}  // namespace aptrans
