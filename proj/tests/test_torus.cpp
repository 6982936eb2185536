#include "doctest.h"

#include <random>

#include "aptrans/corpus.hpp"
#include "aptrans/torus.hpp"

using namespace aptrans;

namespace {

Block blk(const char* t, int a, int mult = 1, int eta = 1) { return Block{HalfInt::parse(t), eta, a, mult}; }
ClassicalGroup sp(int n) { return ClassicalGroup(GroupKind::Sp, n); }
ArthurParameter sp4() { return ArthurParameter(sp(2), {blk("3/2", 2), blk("0", 1)}); }

// Sp(18): copies (t=1, a=1), (t=1/2, a=2) and triv⊗R[3].
ArthurParameter two_block() { return ArthurParameter(sp(4), {blk("1", 1), blk("1/2", 2), blk("0", 3)}); }

}  // namespace

TEST_CASE("symmetrize") {
    const GroupType b2(Family::B, 2), c2(Family::C, 2);
    const auto e = symmetrize(b2, Weight::from_ints({1, 0}));
    CHECK(e.weights().size() == 4);
    CHECK(e.terms.size() == 1);
    CHECK(e.terms.begin()->second == 2);
    const auto f = symmetrize(c2, Weight::from_ints({2, 1}));
    CHECK(f.weights().size() == 8);
    CHECK(f.terms.begin()->second == 1);
    const auto z = symmetrize(c2, Weight::from_ints({0, 0}));
    CHECK(z.weights().size() == 1);
    CHECK(z.terms.begin()->second == 8);
}

TEST_CASE("tensor support and weak unipotence") {
    const GroupType c2(Family::C, 2);
    const auto nu = Weight::from_ints({2, 1});
    CHECK(tensor_infchar_support(nu, trivial_combination(c2)) == std::vector<Weight>{nu});
    const auto e = symmetrize(c2, Weight::from_ints({1, 0}));
    const std::vector<Weight> want{Weight::from_ints({1, 1}), Weight::from_ints({2, 0}), Weight::from_ints({2, 2}),
                                   Weight::from_ints({3, 1})};
    CHECK(tensor_infchar_support(nu, e) == want);
    const auto support = tensor_infchar_support(nu, e);
    CHECK(std::find(support.begin(), support.end(), Weight::from_ints({4, 0})) == support.end());

    const std::vector<Weight> forbidden{Weight::from_ints({1, 1}), Weight::from_ints({2, 0})};
    CHECK(weak_unipotence_norm_test(nu, e) == forbidden);
    const GroupType b1(Family::B, 1);
    CHECK(weak_unipotence_norm_test(Weight({HalfInt::from_twice(1)}), trivial_combination(b1)).empty());
    CHECK(weak_unipotence_norm_test(Weight::from_ints({0, 0}), e).empty());
    CHECK_THROWS(tensor_infchar_support(Weight::from_ints({1}), e));
}

TEST_CASE("translation weight") {
    const std::vector<std::int64_t> five{5};
    const auto d = translation_weight(sp4(), dominate(sp4(), five));
    CHECK(d.lambda_gl == Weight::from_ints({5, 5, 0, -5, -5}));
    CHECK(d.lambda_g == Weight::from_ints({5, 5}));

    const std::vector<std::int64_t> t73{7, 3};
    const auto plus = dominate(two_block(), t73, 3);
    const auto e = translation_weight(two_block(), plus);
    CHECK(e.lambda_gl == Weight::from_ints({7, 3, 3, 0, 0, 0, -3, -3, -7}));

    const std::vector<std::int64_t> zero{0};
    const auto p5 = dominate(sp4(), five);
    CHECK(translation_weight(p5, p5).lambda_gl.is_zero());
    CHECK_THROWS_AS(translation_weight(p5, sp4()), InputError);
}

TEST_CASE("uniqueness examples") {
    const std::vector<std::int64_t> five{5};
    const auto plus = dominate(sp4(), five);
    const auto r = uniqueness_check(sp4(), plus);
    CHECK(r.nu_plus == Weight::from_ints({7, 6, 0, -6, -7}));
    CHECK(r.rearrangements == 30);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0] == Weight::from_ints({-5, -5, 0, 5, 5}));
    CHECK(r.unique);
    const auto ref = uniqueness_check_reference(sp4(), plus);
    CHECK(ref.rearrangements == 30);
    CHECK(ref.matches == r.matches);

    const ArthurParameter u(sp(2), {blk("0", 5)});
    const auto ru = uniqueness_check(u, u);
    CHECK(ru.unique);
    CHECK(ru.rearrangements == 1);

    const std::vector<std::int64_t> t73{7, 3};
    const auto p2 = dominate(two_block(), t73, 3);
    CHECK(uniqueness_check(two_block(), p2).unique);
    CHECK(uniqueness_check_reference(two_block(), p2).unique);
}

TEST_CASE("uniqueness fails below the very-regular threshold") {
    const ArthurParameter psi(sp(3), {blk("1/2", 2), blk("0", 3)});
    const std::vector<std::int64_t> t{1};
    const auto plus = dominate(psi, t, 0);
    const auto r = uniqueness_check(psi, plus);
    const auto ref = uniqueness_check_reference(psi, plus);
    CHECK(r.matches == ref.matches);
    CHECK(r.matches.size() == 4);
    CHECK_FALSE(r.unique);
    CHECK(uniqueness_check(psi, dominate(psi, canonical_offsets(psi))).unique);
}

TEST_CASE("infinitesimal character transfer") {
    CHECK(transfer_infchar(Weight::from_ints({2, 1}), sp(2)) == Weight::from_ints({2, 1, 0, -1, -2}));
    const ClassicalGroup so4(GroupKind::SOodd, 2);
    CHECK(transfer_infchar(Weight::from_ints({0, 0}), so4) == Weight::from_ints({0, 0, 0, 0}));
    const auto nu = Weight::from_ints({2, 1});
    CHECK(norm_sq(transfer_infchar(nu, sp(2))) == Rational(2) * norm_sq(nu));
    CHECK_THROWS_AS(transfer_infchar(nu, sp(3)), InputError);
}

TEST_CASE("property: symmetrize counts |W| terms") {
    std::mt19937_64 rng(2);
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int r = 1; r <= 4; ++r) {
            const GroupType t(f, r);
            for (int k = 0; k < 10; ++k) {
                std::vector<std::int64_t> c;
                for (int i = 0; i < t.dim(); ++i) c.push_back(static_cast<std::int64_t>(rng() % 5) - 2);
                CHECK(symmetrize(t, Weight::from_ints(c)).total_terms() == static_cast<std::int64_t>(weyl_order(t)));
            }
        }
    }
}

TEST_CASE("property: aligned subtraction reproduces the parameter's layout") {
    for (const auto& psi : parameter_corpus()) {
        const auto plus = dominate(psi, canonical_offsets(psi));
        const auto d = translation_weight(psi, plus);
        CHECK(aligned_gl_layout(plus) - d.lambda_gl == aligned_gl_layout(psi));
    }
}

TEST_CASE("property: pruned and exhaustive uniqueness agree") {
    const auto corpus = parameter_corpus(CorpusBounds{6, 7, 4});
    for (const auto& psi : corpus) {
        const auto plus = dominate(psi, canonical_offsets(psi));
        const auto fast = uniqueness_check(psi, plus);
        const auto ref = uniqueness_check_reference(psi, plus);
        CHECK(fast.matches == ref.matches);
        CHECK(fast.rearrangements == ref.rearrangements);
        CHECK(fast.unique == ref.unique);
    }
}
