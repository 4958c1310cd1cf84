#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <berele/chain.hpp>
#include <berele/io.hpp>
#include <berele/kernels.hpp>
#include <berele/partition.hpp>
#include <berele/pattern.hpp>
#include <berele/qanalog.hpp>
#include <berele/qinsert.hpp>
#include <berele/rational.hpp>
#include <berele/symfunc.hpp>
#include <berele/tableau.hpp>

#include <map>
#include <set>
#include <vector>

using namespace berele;

namespace {

Rational rat(const char* s) { return parse_rational(s); }

ParamContext make_pc(int n, std::vector<Rational> a, const char* q) {
    return ParamContext(n, std::move(a), QContext(rat(q)));
}

// Independent Pascal-style oracle for the Gaussian binomial:
// C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
Rational q_binomial_oracle(const Rational& q, int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    return q_binomial_oracle(q, n - 1, k - 1) + pow_rational(q, k) * q_binomial_oracle(q, n - 1, k);
}

std::vector<Letter> letters(std::initializer_list<int> orders) {
    std::vector<Letter> w;
    for (int o : orders) w.push_back(letter_of_order(o));
    return w;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(rat("3/4")) == "3/4");
    CHECK(to_string(rat("-6/4")) == "-3/2");
    CHECK(to_string(rat("7")) == "7");
    CHECK(rat("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::domain_error);
    CHECK(pow_rational(rat("2/3"), 3) == rat("8/27"));
    CHECK(pow_rational(rat("2"), -2) == rat("1/4"));
    CHECK(pow_rational(rat("5"), 0) == 1);
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}

TEST_CASE("q context validates its range") {
    CHECK_NOTHROW(QContext(Rational(0)));
    CHECK_NOTHROW(QContext(rat("99/100")));
    CHECK_THROWS_AS(QContext(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(QContext(Rational(-1, 2)), std::domain_error);
    QContext q{rat("1/2")};
    CHECK(q.qpow(3) == rat("1/8"));
    CHECK(QContext(Rational(0)).qpow(0) == 1);
}

TEST_CASE("q-Pochhammer and q-binomial values") {
    QContext q{rat("1/2")};
    CHECK(q_pochhammer(q, 0) == 1);
    CHECK(q_pochhammer(q, 2) == rat("3/8"));  // (1-1/2)(1-1/4)
    CHECK(q_binomial(q, 2, 1) == rat("3/2"));
    CHECK(q_binomial(q, 0, 0) == 1);
    CHECK(q_binomial(q, 3, -1) == 0);
    CHECK(q_binomial(q, 3, 4) == 0);
    QContext q0{Rational(0)};
    CHECK(q_binomial(q0, 5, 2) == 1);
}

TEST_CASE("q-binomial matches the Pascal-recurrence oracle") {
    for (const char* qs : {"1/3", "1/2", "2/3"}) {
        QContext q{rat(qs)};
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(q_binomial(q, n, k) == q_binomial_oracle(q.q, n, k));
    }
}

TEST_CASE("q-binomial shift recurrences hold") {
    for (const char* qs : {"0", "1/3", "1/2"})
        CHECK(check_q_binomial_recurrences(QContext(rat(qs)), 8));
}

TEST_CASE("partition canonical form and access") {
    CHECK(Partition({3, 2, 0, 0}).length() == 2);
    CHECK(Partition{}.empty());
    CHECK(Partition({3, 2}).part(5) == 0);
    CHECK(Partition({3, 2}).weight() == 5);
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({-1}), std::domain_error);
    CHECK(Partition({3, 1}).padded(4) == std::vector<int>({3, 1, 0, 0}));
    CHECK(Partition({2, 1}).str() == "(2,1)");
    CHECK(Partition{}.str() == "()");
}

TEST_CASE("dominance and interlacing") {
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(interlaces(Partition({2}), Partition({3, 1})));
    CHECK_FALSE(interlaces(Partition({2}), Partition({3, 3})));
    CHECK(interlaces(Partition{}, Partition({1})));
}

TEST_CASE("one-box neighbors and their symmetry") {
    auto nb = one_box_neighbors(Partition({2, 1}), 2);
    CHECK(nb == std::vector<Partition>({Partition({1, 1}), Partition({2}), Partition({2, 2}),
                                        Partition({3, 1})}));
    for (const Partition& p : enumerate_lambda_n(2, 3))
        for (const Partition& q : one_box_neighbors(p, 2)) {
            auto back = one_box_neighbors(q, 2);
            CHECK(std::find(back.begin(), back.end(), p) != back.end());
        }
    CHECK_THROWS_AS(one_box_neighbors(Partition({1, 1, 1}), 2), std::domain_error);
}

TEST_CASE("partition enumeration is graded and complete") {
    auto all = enumerate_lambda_n(2, 2);
    CHECK(all == std::vector<Partition>({Partition{}, Partition({1}), Partition({2}),
                                         Partition({1, 1}), Partition({2, 1}),
                                         Partition({2, 2})}));
    // Brute-force count oracle: pairs (p1, p2) with m >= p1 >= p2 >= 0.
    for (int m = 0; m <= 4; ++m) {
        long long count = 0;
        for (int p1 = 0; p1 <= m; ++p1)
            for (int p2 = 0; p2 <= p1; ++p2) ++count;
        CHECK(static_cast<long long>(enumerate_lambda_n(2, m).size()) == count);
    }
}

TEST_CASE("letters order and render") {
    CHECK(Letter{2, false}.order() == 3);
    CHECK(Letter{2, true}.order() == 4);
    CHECK(Letter{1, false} < Letter{1, true});
    CHECK(Letter{1, true} < Letter{2, false});
    CHECK(letter_of_order(4) == Letter{2, true});
    CHECK(Letter{3, true}.str(true) == "3'");
    CHECK(Letter{3, true}.str(false) == "3\xCC\x84");
}

TEST_CASE("tableau validation") {
    SymplecticTableau good{2, {{{1, false}, {1, true}}, {{2, false}}}};
    CHECK(validate(good));
    // strict column violation
    SymplecticTableau col{2, {{{1, false}}, {{1, false}}}};
    CHECK_FALSE(validate(col));
    // entry of too-small order in row 2
    SymplecticTableau small{2, {{{1, false}}, {{1, true}}}};
    CHECK_FALSE(validate(small));
    // row decreasing
    SymplecticTableau row{2, {{{2, false}, {1, false}}}};
    CHECK_FALSE(validate(row));
    CHECK(good.shape() == Partition({2, 1}));
}

TEST_CASE("single insertion with cancellation and sliding") {
    // Insert 1-bar into rows [1,1,2,2'],[2,2',3],[3,3'] over n = 3.
    SymplecticTableau t{3,
                        {letters({1, 1, 3, 4}), letters({3, 4, 5}), letters({5, 6})}};
    REQUIRE(validate(t));
    InsertResult res = berele_insert(t, Letter{1, true});
    SymplecticTableau expected{3,
                               {letters({1, 1, 2, 4}), letters({3, 5}), letters({5, 6})}};
    CHECK(res.tableau == expected);
    CHECK(res.shape == Partition({4, 2, 2}));
    CHECK(validate(res.tableau));
}

TEST_CASE("word insertion and its recorded shapes") {
    auto w = letters({6, 3, 2, 6, 1, 3, 1});  // 3' 2 1' 3' 1 2 1
    WordResult res = berele_word(w, 3);
    SymplecticTableau expected{3, {letters({1, 3}), letters({3, 6}), letters({6})}};
    CHECK(res.tableau == expected);
    OscillatingTableau f{Partition{},       Partition({1}),    Partition({1, 1}),
                         Partition({1, 1, 1}), Partition({2, 1, 1}), Partition({2, 1}),
                         Partition({2, 2}), Partition({2, 2, 1})};
    CHECK(res.recording == f);
    CHECK(is_oscillating(res.recording, 3));
}

TEST_CASE("oscillating sequence checks") {
    CHECK(is_oscillating({Partition{}, Partition({1}), Partition{}}, 1));
    CHECK_FALSE(is_oscillating({Partition({1})}, 1));
    CHECK_FALSE(is_oscillating({Partition{}, Partition({2})}, 1));
    CHECK_FALSE(is_oscillating({Partition{}, Partition({1}), Partition({1, 1})}, 1));
}

TEST_CASE("tableau weight") {
    SymplecticTableau t{2, {{{1, false}, {1, true}, {2, false}}, {{2, true}}}};
    std::vector<Rational> a{rat("2"), rat("3")};
    CHECK(tableau_weight(t, a) == 1);  // a_1^{1-1} a_2^{1-1}
    SymplecticTableau u{2, {{{1, false}, {2, false}}}};
    CHECK(tableau_weight(u, a) == 6);
}

TEST_CASE("pattern worked example both ways") {
    SymplecticTableau t{2, {letters({1, 2, 3, 3, 4}), letters({4, 4})}};
    REQUIRE(validate(t));
    GtPattern z = tableau_to_pattern(t);
    CHECK(z.levels == std::vector<std::vector<int>>({{1}, {2}, {4, 0}, {5, 2}}));
    CHECK(pattern_to_tableau(z) == t);
}

TEST_CASE("pattern validity") {
    CHECK(valid(GtPattern::zero(2)));
    CHECK(valid(GtPattern{2, {{1}, {2}, {3, 1}, {4, 2}}}));
    CHECK_FALSE(valid(GtPattern{2, {{1}, {2}, {1, 1}, {4, 2}}}));  // broken interlacing
    CHECK_FALSE(valid(GtPattern{2, {{1}, {2}, {3, 1}}}));          // wrong level count
    CHECK_FALSE(valid(GtPattern{1, {{-1}, {0}}}));                 // negative entry
}

TEST_CASE("tableau-pattern correspondence is a bijection") {
    for (int n : {1, 2}) {
        for (const Partition& shape : enumerate_lambda_n(n, 4)) {
            if (shape.weight() > 5) continue;
            std::set<SymplecticTableau> seen_t;
            std::vector<GtPattern> patterns = enumerate_patterns(n, shape);
            for (const GtPattern& z : patterns) {
                SymplecticTableau t = pattern_to_tableau(z);
                CHECK(validate(t));
                CHECK(t.shape() == shape);
                CHECK(tableau_to_pattern(t) == z);
                seen_t.insert(t);
            }
            CHECK(seen_t.size() == patterns.size());
        }
    }
}

TEST_CASE("deterministic pattern dynamics match the tableau algorithm") {
    GtPattern z{2, {{1}, {2}, {3, 1}, {4, 2}}};
    GtPattern after = classic_insert_pattern(z, Letter{1, true});
    CHECK(after.levels == std::vector<std::vector<int>>({{1}, {3}, {3, 1}, {4, 1}}));
    for (int n : {1, 2}) {
        for (const Partition& shape : enumerate_lambda_n(n, 3)) {
            for (const GtPattern& zz : enumerate_patterns(n, shape)) {
                for (int v = 1; v <= n; ++v) {
                    for (bool barred : {false, true}) {
                        Letter l{v, barred};
                        GtPattern via_pattern = classic_insert_pattern(zz, l);
                        SymplecticTableau t =
                            berele_insert(pattern_to_tableau(zz), l).tableau;
                        CHECK(via_pattern == tableau_to_pattern(t));
                    }
                }
            }
        }
    }
}

TEST_CASE("jump probabilities: pinned values and degenerate cases") {
    QContext q{rat("1/2")};
    InterlacedPair p{Partition({3, 1}), Partition({3, 2})};
    CHECK(r_prob(q, p, 2) == rat("1/3"));
    CHECK(l_prob(q, p, 1) == rat("1/3"));
    CHECK(r_prob(q, InterlacedPair{Partition({1}), Partition({2})}, 1) == rat("1/2"));
    CHECK(r_prob(q, InterlacedPair{Partition({2}), Partition({2})}, 1) == 1);
    // forced push: x_{i-1} = x_i
    CHECK(r_prob(q, InterlacedPair{Partition({2, 2}), Partition({2, 2})}, 2) == 1);
    // growing pair: l_1 with x_2 = 0 and y_2 = 0 vanishes
    CHECK(l_prob(q, InterlacedPair{Partition({2}), Partition({2})}, 1) == 0);
    // forced pull: x_i = x_{i+1}
    CHECK(l_prob(q, InterlacedPair{Partition({2, 2}), Partition({2, 2, 1})}, 1) == 1);
    CHECK_THROWS_AS(r_prob(q, InterlacedPair{Partition({3}), Partition({1})}, 1),
                    std::domain_error);
}

TEST_CASE("jump probabilities stay within [0,1]") {
    for (const char* qs : {"1/3", "1/2", "2/3"}) {
        QContext q{rat(qs)};
        for (const Partition& y : enumerate_lambda_n(3, 5)) {
            if (y.length() > 3) continue;
            for (int xlen : {static_cast<int>(y.length()), static_cast<int>(y.length()) - 1}) {
                if (xlen < 0) continue;
                for (const Partition& x : enumerate_interlacing(y, xlen)) {
                    InterlacedPair pair{x, y};
                    for (int i = 1; i <= xlen; ++i) {
                        Rational r = r_prob(q, pair, i);
                        Rational l = l_prob(q, pair, i);
                        CHECK(r >= 0);
                        CHECK(r <= 1);
                        CHECK(l >= 0);
                        CHECK(l <= 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("one-letter insertion distributions") {
    QContext q{rat("1/2")};
    GtPattern z{1, {{0}, {1}}};
    PatternDistribution d = insert_letter(q, z, Letter{1, false});
    REQUIRE(d.size() == 2);
    CHECK(d.at(GtPattern{1, {{1}, {2}}}) == rat("1/2"));
    CHECK(d.at(GtPattern{1, {{0}, {0}}}) == rat("1/2"));
    // barred letter: deterministic bottom-level jump
    PatternDistribution db = insert_letter(q, z, Letter{1, true});
    REQUIRE(db.size() == 1);
    CHECK(db.at(GtPattern{1, {{0}, {2}}}) == 1);
}

TEST_CASE("insertion distributions sum to one and stay valid") {
    for (const char* qs : {"0", "1/3", "1/2"}) {
        QContext q{rat(qs)};
        for (int n : {1, 2}) {
            for (const Partition& shape : enumerate_lambda_n(n, 3)) {
                for (const GtPattern& z : enumerate_patterns(n, shape)) {
                    for (int v = 1; v <= n; ++v) {
                        for (bool barred : {false, true}) {
                            PatternDistribution d = insert_letter(q, z, Letter{v, barred});
                            Rational total = 0;
                            for (const auto& [z2, p] : d) {
                                CHECK(p > 0);
                                CHECK(valid(z2));
                                total += p;
                            }
                            CHECK(total == 1);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("insertion at q=0 degenerates to the deterministic dynamics") {
    QContext q0{Rational(0)};
    for (int n : {1, 2}) {
        for (const Partition& shape : enumerate_lambda_n(n, 3)) {
            for (const GtPattern& z : enumerate_patterns(n, shape)) {
                for (int v = 1; v <= n; ++v) {
                    for (bool barred : {false, true}) {
                        Letter l{v, barred};
                        PatternDistribution d = insert_letter(q0, z, l);
                        REQUIRE(d.size() == 1);
                        CHECK(d.begin()->first == classic_insert_pattern(z, l));
                        CHECK(d.begin()->second == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("word weight tables") {
    QContext q{rat("1/2")};
    WeightTable empty = phi_word(q, {}, 1);
    REQUIRE(empty.size() == 1);
    CHECK(empty.begin()->second == 1);
    WeightTable single = phi_word(q, {Letter{1, true}}, 1);
    REQUIRE(single.size() == 1);
    CHECK(single.begin()->first.first == GtPattern{1, {{0}, {1}}});
    // 1' then 1: the second insertion branches with r_1 = q^{1-0} = 1/2
    WeightTable two = phi_word(q, {Letter{1, true}, Letter{1, false}}, 1);
    Rational total = 0;
    for (const auto& [key, w] : two) {
        CHECK(key.first.shape() == key.second.back());
        total += w;
    }
    CHECK(total == 1);
    REQUIRE(two.size() == 2);
    CHECK(two.at({GtPattern{1, {{1}, {2}}},
                  OscillatingTableau{Partition{}, Partition({1}), Partition({2})}}) ==
          rat("1/2"));
    CHECK(two.at({GtPattern{1, {{0}, {0}}},
                  OscillatingTableau{Partition{}, Partition({1}), Partition{}}}) ==
          rat("1/2"));
}

TEST_CASE("parameter context") {
    ParamContext pc = make_pc(2, {rat("2"), rat("3")}, "1/2");
    CHECK(pc.a_letter(Letter{2, true}) == rat("1/3"));
    CHECK(pc.normalizer() == rat("35/6"));
    CHECK_THROWS_AS(make_pc(2, {rat("2")}, "1/2"), std::domain_error);
    CHECK_THROWS_AS(make_pc(1, {rat("0")}, "1/2"), std::domain_error);
    CHECK_THROWS_AS(pc.a_letter(Letter{3, false}), std::domain_error);
}

TEST_CASE("one-box transition weights") {
    ParamContext pc = make_pc(2, {rat("2"), rat("3")}, "1/2");
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({3, 1})) == 1);
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({2, 2})) == rat("1/2"));
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({2})) == rat("1/2"));
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({1, 1})) == rat("1/2"));
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(kernel_L(pc, Partition({2, 1}), Partition({3, 2})) == 0);
    CHECK(kernel_L(pc, Partition({2, 2}), Partition({2, 1})) == rat("3/4"));
}

TEST_CASE("pattern weights kappa and the monomial") {
    ParamContext pc = make_pc(1, {rat("2")}, "1/2");
    CHECK(kappa(pc, GtPattern::zero(1)) == 1);
    CHECK(kappa(pc, GtPattern{1, {{1}, {2}}}) == rat("3/2"));
    CHECK(pattern_monomial(pc, GtPattern{1, {{1}, {2}}}) == 1);
    ParamContext pc0 = make_pc(2, {rat("2"), rat("3")}, "0");
    for (const Partition& shape : enumerate_lambda_n(2, 2)) {
        for (const GtPattern& z : enumerate_patterns(2, shape)) {
            CHECK(kappa(pc0, z) == 1);
            std::vector<Rational> a{rat("2"), rat("3")};
            CHECK(pattern_monomial(pc0, z) == tableau_weight(pattern_to_tableau(z), a));
        }
    }
}

TEST_CASE("kernel K and kernel M") {
    ParamContext pc = make_pc(1, {rat("2")}, "1/2");
    CHECK(kernel_K(pc, Partition({2}), GtPattern{1, {{1}, {2}}}) == rat("3/2"));
    CHECK(kernel_K(pc, Partition({1}), GtPattern{1, {{1}, {2}}}) == 0);
    CHECK(kernel_K(pc, Partition{}, GtPattern::zero(1)) == 1);
    GtPattern z{1, {{0}, {1}}};
    CHECK(kernel_M(pc, z, GtPattern{1, {{0}, {2}}}) == rat("1/2"));
    CHECK(kernel_M(pc, z, GtPattern{1, {{1}, {2}}}) == 1);
    CHECK(kernel_M(pc, z, GtPattern{1, {{3}, {3}}}) == 0);
}

TEST_CASE("bottom-triple kernels") {
    ParamContext pc = make_pc(2, {rat("2"), rat("3")}, "1/2");
    BottomTriple t{Partition({1}), Partition({2, 1}), Partition({2, 1})};
    CHECK(triple_valid(t, 2));
    CHECK_FALSE(triple_valid(BottomTriple{Partition({3}), Partition({2}), Partition({2})}, 2));
    CHECK(hat_K(pc, Partition({2, 1}), t) ==
          pow_rational(rat("3"), 2 * 3 - 1 - 3) * kappa_hat(pc.ctx, 2, t));
    CHECK(hat_K(pc, Partition({3}), t) == 0);
    // table row (x, y+e1, z+e1): a_n r_1(z;y)
    BottomTriple t2{Partition({1}), Partition({3, 1}), Partition({3, 1})};
    CHECK(hat_M(pc, t, t2) ==
          rat("3") * r_prob(pc.ctx, InterlacedPair{t.y, t.z}, 1));
    // unlisted target
    CHECK(hat_M(pc, t, BottomTriple{Partition({1}), Partition({2, 1}), Partition({2, 1})}) == 0);
    // rank one reduces to the two-entry kernel
    ParamContext pc1 = make_pc(1, {rat("2")}, "1/2");
    BottomTriple s{Partition{}, Partition({1}), Partition({2})};
    CHECK(hat_M(pc1, s, BottomTriple{Partition{}, Partition({2}), Partition({3})}) ==
          rat("2") * r_prob(pc1.ctx, InterlacedPair{Partition({1}), Partition({2})}, 1));
    CHECK(hat_M(pc1, s, BottomTriple{Partition{}, Partition({1}), Partition({1})}) ==
          rat("2") * (1 - r_prob(pc1.ctx, InterlacedPair{Partition({1}), Partition({2})}, 1)));
    CHECK(hat_M(pc1, s, BottomTriple{Partition{}, Partition({1}), Partition({3})}) == rat("1/2"));
}

TEST_CASE("intertwining sweeps at small bounds") {
    for (const char* qs : {"0", "1/2"}) {
        ParamContext pc1 = make_pc(1, {rat("2")}, qs);
        IntertwineReport r1 = verify_intertwining(pc1, 3);
        CHECK(r1.pass());
        CHECK(r1.checked > 0);
        ParamContext pc2 = make_pc(2, {rat("2"), rat("3")}, qs);
        IntertwineReport r2 = verify_intertwining(pc2, 2);
        CHECK(r2.pass());
    }
}

TEST_CASE("symplectic Schur values") {
    CHECK(sp_schur(make_pc(1, {rat("2")}, "0"), Partition{}) == 1);
    CHECK(sp_schur(make_pc(1, {rat("2")}, "0"), Partition({1})) == rat("5/2"));
    CHECK(sp_schur(make_pc(2, {rat("2"), rat("3")}, "0"), Partition({1})) == rat("35/6"));
    CHECK(sp_schur(make_pc(1, {rat("2")}, "0"), Partition({2})) == rat("21/4"));
    // a = 1 counts tableaux
    CHECK(sp_schur(make_pc(2, {rat("1"), rat("1")}, "0"), Partition({1})) == 4);
}

TEST_CASE("q-deformed P function") {
    ParamContext pc = make_pc(1, {rat("2")}, "1/2");
    CHECK(p_function(pc, Partition{}) == 1);
    CHECK(p_function(pc, Partition({2})) == rat("23/4"));
    for (int n : {1, 2}) {
        ParamContext pc0 = n == 1 ? make_pc(1, {rat("2")}, "0")
                                  : make_pc(2, {rat("2"), rat("3")}, "0");
        for (const Partition& lam : enumerate_lambda_n(n, 3))
            CHECK(p_function(pc0, lam) == sp_schur(pc0, lam));
    }
}

TEST_CASE("rank-one polynomials") {
    QContext q{rat("1/2")};
    CHECK(q_hermite(q, 0, rat("2")) == 1);
    CHECK(q_hermite(q, 1, rat("2")) == rat("5/2"));
    for (const char* qs : {"0", "1/2"}) {
        for (const char* as : {"2", "3/2"}) {
            ParamContext pc = make_pc(1, {rat(as)}, qs);
            for (int ell = 0; ell <= 10; ++ell)
                CHECK(q_hermite(pc.ctx, ell, rat(as)) ==
                      p_function(pc, Partition({ell})));
        }
    }
}

TEST_CASE("weighted oscillating counts") {
    ParamContext pc2 = make_pc(2, {rat("2"), rat("3")}, "0");
    CHECK(q_count(pc2, 0, Partition{}) == 1);
    CHECK(q_count(pc2, 2, Partition{}) == 1);
    CHECK(q_count(pc2, 2, Partition({2})) == 1);
    CHECK(q_count(pc2, 2, Partition({1, 1})) == 1);
    ParamContext pc1 = make_pc(1, {rat("2")}, "1/2");
    CHECK(q_count(pc1, 2, Partition{}) == rat("1/2"));
    // q = 0 equals a brute-force census of oscillating sequences
    for (int n : {1, 2}) {
        ParamContext pc0 = n == 1 ? make_pc(1, {rat("2")}, "0")
                                  : make_pc(2, {rat("2"), rat("3")}, "0");
        for (int m = 0; m <= 4; ++m) {
            std::map<Partition, long long> census;
            std::vector<std::pair<Partition, long long>> frontier{{Partition{}, 1}};
            for (int step = 0; step < m; ++step) {
                std::map<Partition, long long> next;
                for (const auto& [p, c] : frontier)
                    for (const Partition& r : one_box_neighbors(p, n)) next[r] += c;
                frontier.assign(next.begin(), next.end());
            }
            for (const auto& [p, c] : frontier) census[p] = c;
            for (const Partition& lam : enumerate_lambda_n(n, m)) {
                long long expected = census.count(lam) ? census.at(lam) : 0;
                CHECK(q_count(pc0, m, lam) == expected);
            }
        }
    }
}

TEST_CASE("identity sweeps pass") {
    ParamContext pc2 = make_pc(2, {rat("2"), rat("3")}, "1/2");
    CHECK(check_pieri(pc2, 3).pass());
    CHECK(check_eigenrelation(pc2, 3).pass());
    CHECK(check_littlewood(pc2, 3).pass());
    ParamContext pc1 = make_pc(1, {rat("2")}, "1/2");
    IdentityReport eig = check_eigenrelation(pc1, 2);
    CHECK(eig.pass());
    CHECK(eig.instances_checked == 3);
}

TEST_CASE("letter distribution") {
    ParamContext pc = make_pc(2, {rat("2"), rat("3")}, "1/2");
    LetterDistribution rho(pc);
    Rational total = 0;
    for (const auto& [l, p] : rho.probs) total += p;
    CHECK(total == 1);
    CHECK(rho.probs[0].second == rat("2") / rat("35/6"));
    CHECK(rho.probs[1].second == rat("1/2") / rat("35/6"));
}

TEST_CASE("shape kernels and their row sums") {
    ParamContext pc1 = make_pc(1, {rat("2")}, "0");
    CHECK(shape_kernel_classic(pc1, Partition{}, Partition({1})) == 1);
    CHECK(shape_kernel_classic(pc1, Partition({1}), Partition({2})) == rat("21/25"));
    CHECK(shape_kernel_classic(pc1, Partition({1}), Partition{}) == rat("4/25"));
    for (int n : {1, 2}) {
        for (const char* qs : {"0", "1/2"}) {
            ParamContext pc = n == 1 ? make_pc(1, {rat("2")}, qs)
                                     : make_pc(2, {rat("2"), rat("3")}, qs);
            for (const Partition& mu : enumerate_lambda_n(n, 3)) {
                Rational rc = 0, rq = 0;
                for (const Partition& lam : one_box_neighbors(mu, n)) {
                    rc += shape_kernel_classic(pc, mu, lam);
                    rq += shape_kernel_q(pc, mu, lam);
                    if (pc.ctx.q == 0)
                        CHECK(shape_kernel_classic(pc, mu, lam) ==
                              shape_kernel_q(pc, mu, lam));
                }
                CHECK(rc == 1);
                CHECK(rq == 1);
            }
        }
    }
}

TEST_CASE("doob factorization at q=0") {
    CHECK(doob_decomposition_check(make_pc(1, {rat("2")}, "0"), 3).pass());
    CHECK(doob_decomposition_check(make_pc(2, {rat("2"), rat("3")}, "0"), 3).pass());
    CHECK_THROWS_AS(doob_decomposition_check(make_pc(1, {rat("2")}, "1/2"), 2),
                    std::domain_error);
}

TEST_CASE("simulation is reproducible and couples at q=0") {
    ParamContext pc = make_pc(2, {rat("2"), rat("3")}, "1/2");
    Trajectory t1 = simulate(pc, 5, 42);
    Trajectory t2 = simulate(pc, 5, 42);
    CHECK(t1.patterns == t2.patterns);
    CHECK(t1.shapes == t2.shapes);
    Trajectory t0 = simulate(pc, 0, 7);
    CHECK(t0.patterns == std::vector<GtPattern>{GtPattern::zero(2)});
    CHECK(t0.shapes == std::vector<Partition>{Partition{}});
    // q = 0: the trajectory is the deterministic insertion of the letter draw
    ParamContext pc0 = make_pc(2, {rat("2"), rat("3")}, "0");
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ExactSampler s(seed);
        std::vector<Letter> w = sample_word(pc0, 6, s);
        Trajectory t = simulate(pc0, 6, seed);
        WordResult ref = berele_word(w, 2);
        CHECK(t.shapes == ref.recording);
        CHECK(t.patterns.back() == tableau_to_pattern(ref.tableau));
    }
}

TEST_CASE("exact shape law") {
    ParamContext pc = make_pc(1, {rat("2")}, "1/2");
    auto nu1 = exact_shape_law(pc, 1);
    REQUIRE(nu1.size() == 1);
    CHECK(nu1.at(Partition({1})) == 1);
    auto nu3 = exact_shape_law(pc, 3);
    Rational total = 0;
    for (const auto& [lam, p] : nu3) total += p;
    CHECK(total == 1);
}

TEST_CASE("markovization of the shape process") {
    CHECK(check_shape_markov(make_pc(1, {rat("2")}, "1/2"), 3).pass());
    CHECK(check_shape_markov(make_pc(2, {rat("2"), rat("3")}, "1/2"), 3).pass());
}

TEST_CASE("empirical laws approach the exact ones") {
    ParamContext pc = make_pc(1, {rat("2")}, "1/2");
    EmpiricalReport r = empirical_vs_exact(pc, 2, 20000, 123);
    CHECK(r.pass());
}

TEST_CASE("letter and word parsing") {
    CHECK(parse_letter("3") == Letter{3, false});
    CHECK(parse_letter("3'") == Letter{3, true});
    CHECK(parse_letter("2\xCC\x84") == Letter{2, true});
    CHECK_THROWS_AS(parse_letter("x"), std::domain_error);
    CHECK_THROWS_AS(parse_letter("2x"), std::domain_error);
    CHECK_THROWS_AS(parse_letter("0"), std::domain_error);
    auto w = parse_word("3' 2 1' 3' 1 2 1");
    REQUIRE(w.size() == 7);
    CHECK(w[0] == Letter{3, true});
    CHECK(w[4] == Letter{1, false});
}

TEST_CASE("json round trips") {
    Partition p({3, 1});
    CHECK(partition_from_json(to_json(p)) == p);
    GtPattern z{2, {{1}, {2}, {3, 1}, {4, 2}}};
    CHECK(pattern_from_json(to_json(z)) == z);
    CHECK_THROWS_AS(pattern_from_json(json{{"n", 2}, {"levels", {{3}, {1}, {1, 0}, {1, 0}}}}),
                    std::domain_error);
    QContext q{rat("1/2")};
    PatternDistribution d = insert_letter(q, GtPattern{1, {{0}, {1}}}, Letter{1, false});
    json jd = to_json(d);
    REQUIRE(jd.size() == 2);
    CHECK(jd[0].at("prob") == "1/2");
}
