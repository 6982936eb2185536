#include "doctest.h"

#include <algorithm>
#include <set>

#include "aptrans/arthur.hpp"
#include "aptrans/corpus.hpp"

using namespace aptrans;

namespace {

Block blk(const char* t, int a, int mult = 1, int eta = 1) { return Block{HalfInt::parse(t), eta, a, mult}; }

ClassicalGroup sp(int n) { return ClassicalGroup(GroupKind::Sp, n); }
ClassicalGroup so_odd(int n) { return ClassicalGroup(GroupKind::SOodd, n); }

ArthurParameter sp4() { return ArthurParameter(sp(2), {blk("3/2", 2), blk("0", 1)}); }

std::vector<HalfInt> halves(std::initializer_list<int> twice) {
    std::vector<HalfInt> out;
    for (int x : twice) out.push_back(HalfInt::from_twice(x));
    return out;
}

}  // namespace

TEST_CASE("groups") {
    CHECK(sp(2).nstar() == 5);
    CHECK(so_odd(3).nstar() == 6);
    CHECK(ClassicalGroup(GroupKind::SOeven, 2).nstar() == 4);
    CHECK(sp(2).epsilon() == HalfInt(1));
    CHECK(so_odd(2).epsilon() == HalfInt::from_twice(1));
    const ClassicalGroup so32(GroupKind::SOodd, 2, std::pair{3, 2});
    CHECK(so32.quasi_split());
    CHECK(so32.name() == "SO(3,2)");
    CHECK_FALSE(ClassicalGroup(GroupKind::SOodd, 2, std::pair{5, 0}).quasi_split());
    CHECK_THROWS_AS(ClassicalGroup(GroupKind::SOodd, 2, std::pair{3, 3}), InputError);
}

TEST_CASE("dimension") {
    CHECK(sp4().dimension() == 5);
    CHECK_THROWS_AS(ArthurParameter(so_odd(3), {blk("0", 7)}), InputError);
    CHECK(ArthurParameter(so_odd(2), {blk("1/2", 1), blk("3/2", 1)}).dimension() == 4);
    CHECK_THROWS_AS(ArthurParameter(sp(1), {blk("-1/2", 1), blk("0", 1)}), InputError);
}

TEST_CASE("normalization merges and sorts blocks") {
    const ArthurParameter p(so_odd(2), {blk("1/2", 1), blk("3/2", 1, 1, -1)});
    REQUIRE(p.blocks().size() == 2);
    CHECK(p.blocks()[0].t == HalfInt::from_twice(3));
    CHECK(p.blocks()[0].eta == 1);
    const ArthurParameter q(so_odd(2), {blk("1/2", 1), blk("1/2", 1)});
    REQUIRE(q.blocks().size() == 1);
    CHECK(q.blocks()[0].mult == 2);
    CHECK(q.discrete_copies().size() == 2);
}

TEST_CASE("good parity") {
    CHECK(good_parity(sp4()).good);
    const ArthurParameter bad(sp(2), {blk("1", 2), blk("0", 1)});
    const auto rep = good_parity(bad);
    CHECK_FALSE(rep.good);
    CHECK_FALSE(rep.blocks[0].good);
    CHECK(rep.blocks[1].good);
    CHECK(good_parity(ArthurParameter(so_odd(2), {blk("0", 2, 1, 1), blk("0", 2, 1, -1)})).good);
}

TEST_CASE("infinitesimal characters") {
    CHECK(inf_char(sp4(), Side::GL).data == Weight::from_ints({2, 1, 0, -1, -2}));
    CHECK(inf_char(sp4(), Side::G).data == Weight::from_ints({2, 1}));
    const ArthurParameter u(sp(2), {blk("0", 5)});
    CHECK(inf_char(u, Side::GL).data == Weight::from_ints({2, 1, 0, -1, -2}));
    const ArthurParameter p(so_odd(2), {blk("1/2", 1), blk("3/2", 1)});
    CHECK(inf_char(p, Side::G).data == Weight(halves({3, 1})));
}

TEST_CASE("domination") {
    const std::vector<std::int64_t> five{5};
    const auto plus = dominate(sp4(), five);
    CHECK(plus == ArthurParameter(sp(2), {blk("13/2", 2), blk("0", 1)}));
    CHECK(domination_offsets(sp4(), plus) == five);

    const std::vector<Rational> half{Rational(1, 2)};
    CHECK_THROWS_AS(dominate(sp4(), half), InputError);

    const std::vector<std::int64_t> zero{0};
    CHECK(dominate(plus, zero) == plus);
    CHECK(canonical_offsets(plus) == zero);

    const std::vector<std::int64_t> one{1};
    CHECK_THROWS_AS(dominate(sp4(), one), InputError);   // t' = 5/2 < 5
    CHECK(canonical_offsets(sp4()) == std::vector<std::int64_t>{4});

    const ArthurParameter two(so_odd(2), {blk("1/2", 1, 2)});
    const auto T = canonical_offsets(two);
    CHECK(T == std::vector<std::int64_t>{8, 4});
    const std::vector<std::int64_t> increasing{4, 8};
    CHECK_THROWS_AS(dominate(two, increasing), InputError);
}

TEST_CASE("component groups") {
    const auto a = component_group(sp4());
    CHECK(a.order() == 2);
    CHECK(a.s_psi() == SignVector{-1, 1});
    CHECK(a.contains(a.s_psi()));
    CHECK_FALSE(a.center());

    CHECK(component_group(ArthurParameter(sp(2), {blk("0", 5)})).order() == 1);

    const auto b = component_group(ArthurParameter(so_odd(2), {blk("1/2", 1), blk("3/2", 1)}));
    CHECK(b.order() == 4);
    CHECK_FALSE(b.relation());
    REQUIRE(b.center());
    CHECK(*b.center() == SignVector{-1, -1});

    CHECK_THROWS_AS(component_group(ArthurParameter(sp(2), {blk("1", 2), blk("0", 1)})), InputError);
}

TEST_CASE("characters") {
    const auto a = component_group(sp4());
    const auto cs = characters(a);
    CHECK(cs.size() == a.order());
    for (const auto& c : cs) CHECK(c(a.identity()) == 1);
    // the two characters differ on s_psi
    CHECK(cs[0](a.s_psi()) != cs[1](a.s_psi()));
}

TEST_CASE("quotient maps") {
    const std::vector<std::int64_t> five{5};
    const auto iso = quotient_map(dominate(sp4(), five), sp4());
    CHECK(iso.is_isomorphism());
    CHECK(iso.is_surjective());

    const ArthurParameter two(so_odd(2), {blk("1/2", 1, 2)});
    const auto plus = dominate(two, canonical_offsets(two));
    const auto q = quotient_map(plus, two);
    CHECK(q.source().order() == 4);
    CHECK(q.target().order() == 2);
    CHECK(q.kernel().size() == 2);
    CHECK(q.is_homomorphism());
    CHECK(q.is_surjective());

    const Character odd{{-1, 1}};
    CHECK_FALSE(q.trivial_on_kernel(odd));
    CHECK_FALSE(q.descend(odd));
    const Character even{{-1, -1}};
    const auto d = q.descend(even);
    REQUIRE(d);
    CHECK(d->values == std::vector<int>{-1});
    CHECK(q.pull_back(*d) == even);
}

TEST_CASE("endoscopic splits") {
    const auto s = endoscopic_split(sp4(), {-1, 1});
    CHECK(s.n_minus == 4);
    CHECK(s.n_plus == 1);
    CHECK(s.psi_minus.group() == ClassicalGroup(GroupKind::SOeven, 2));
    CHECK(s.psi_plus.group() == sp(0));

    const auto id = endoscopic_split(sp4(), {1, 1});
    CHECK(id.n_minus == 0);
    CHECK(id.psi_plus == sp4());
    CHECK(id.psi_minus.blocks().empty());

    const ArthurParameter p(so_odd(2), {blk("1/2", 1), blk("3/2", 1)});
    const auto t = endoscopic_split(p, {-1, 1});
    CHECK(t.n_minus == 2);
    CHECK(t.n_plus == 2);
    CHECK(t.psi_minus.group() == so_odd(1));
    CHECK(t.psi_plus.group() == so_odd(1));

    CHECK_THROWS_AS(endoscopic_split(sp4(), {1, -1}), InputError);  // determinant −1
    CHECK_THROWS_AS(endoscopic_split(sp4(), {1}), InputError);
}

TEST_CASE("property: corpus-wide parameter invariants") {
    const auto corpus = parameter_corpus();
    CHECK(corpus.size() > 100);
    for (const auto& psi : corpus) {
        CHECK(good_parity(psi).good);
        const auto plus = dominate(psi, canonical_offsets(psi));
        CHECK(plus.dimension() == psi.dimension());
        CHECK(good_parity(plus).good);
        CHECK(plus.unipotent_part() == psi.unipotent_part());

        const auto gl = inf_char(psi, Side::GL).data;
        CHECK(-gl == Weight(std::vector<HalfInt>(gl.coords().rbegin(), gl.coords().rend())));
        const auto g = inf_char(psi, Side::G).data;
        CHECK(dominant_rep(psi.group().root_type(), g) == g);

        const auto a = component_group(psi);
        const std::size_t expect = std::size_t{1} << (a.rank() - (a.relation_nontrivial() ? 1 : 0));
        CHECK(a.order() == expect);
        CHECK(a.contains(a.s_psi()));
        if (a.center()) CHECK(a.contains(*a.center()));

        const auto q = quotient_map(plus, psi);
        CHECK(q.is_homomorphism());
        CHECK(q.is_surjective());
        CHECK(q.kernel().size() * q.target().order() == q.source().order());

        const std::size_t k = psi.blocks().size();
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            SignVector s(k), neg(k);
            for (std::size_t j = 0; j < k; ++j) {
                s[j] = (m >> j) & 1u ? -1 : 1;
                neg[j] = -s[j];
            }
            const int nm = [&] {
                int d = 0;
                for (std::size_t j = 0; j < k; ++j)
                    if (s[j] < 0) d += psi.blocks()[j].total_dim();
                return d;
            }();
            if (psi.group().dual_special_orthogonal() && nm % 2) {
                CHECK_THROWS_AS(endoscopic_split(psi, s), InputError);
                continue;
            }
            const auto x = endoscopic_split(psi, s);
            CHECK(x.n_minus + x.n_plus == psi.group().nstar());
            if (psi.group().dual_special_orthogonal() && (psi.group().nstar() - nm) % 2) continue;
            const auto y = endoscopic_split(psi, neg);
            CHECK(y.n_minus == x.n_plus);
            CHECK(y.psi_minus == x.psi_plus);
            CHECK(y.psi_plus == x.psi_minus);
        }
    }
}
