#include <doctest.h>

#include <hdt/reduction_3sum.hpp>
#include <hdt/solver.hpp>

using namespace hdt;

namespace {

Point pt_rational(const Rational& x, const Rational& y) {
    return Point(ExactScalar(x), ExactScalar(y));
}

}  // namespace

TEST_SUITE("reduction_3sum") {

TEST_CASE("parameters pin epsilon to a rational with rational sqrt") {
    auto inst = Conv3SumInstance::from_sequence({2});
    auto params = Reduction3SumParams::make(inst);
    CHECK(params.rho == Rational(1, 8));
    CHECK(params.epsilon == params.rho.pow(4));
    CHECK(params.epsilon_15 == params.rho.pow(6));
    CHECK(params.epsilon_15 * params.epsilon_15 == params.epsilon.pow(3));  // (eps^1.5)^2 = eps^3
    CHECK(params.delta == Rational(1) + Rational(4) * params.epsilon.pow(2));
    CHECK(params.delta > Rational(1));
}

TEST_CASE("low level gadget coordinates") {
    auto inst = Conv3SumInstance::from_sequence({2});
    auto params = Reduction3SumParams::make(inst);
    auto g = low_level_gadget(inst, params);
    const Rational rho6 = params.rho.pow(6);
    const Rational rho4 = params.rho.pow(4);
    REQUIRE(g.a.size() == 3);
    CHECK(g.a.points[0] == pt_rational(Rational(2) * rho6, Rational(0)));
    CHECK(g.a.points[1] == pt_rational(rho4 + Rational(2) * rho6, Rational(0)));
    CHECK(g.a.points[2] == pt_rational(Rational(3, 2) * rho4, Rational(0)));
    REQUIRE(g.b.size() == 2);
    CHECK(g.b.points[0] == pt_rational(Rational(-1), Rational(0)));
    CHECK(g.b.points[1] == pt_rational(Rational(1) + rho4, Rational(0)));
    // anchor gap is 2 + eps
    CHECK(g.b.points[1].x - g.b.points[0].x == ExactScalar(Rational(2) + params.epsilon));

    auto three = Conv3SumInstance::from_sequence({5, 2, 4});
    auto params3 = Reduction3SumParams::make(three);
    CHECK(low_level_gadget(three, params3).a.size() == 9);
}

TEST_CASE("rotate90") {
    PointSet s;
    s.points = {pt_rational(Rational(1), Rational(0)), pt_rational(Rational(0), Rational(0))};
    PointSet r = rotate90(s);
    CHECK(r.points[0] == pt_rational(Rational(0), Rational(1)));
    CHECK(r.points[1] == pt_rational(Rational(0), Rational(0)));

    PointSet four = rotate90(rotate90(rotate90(rotate90(s))));
    CHECK(four.points == s.points);
}

TEST_CASE("diagonal transform geometry") {
    auto inst = Conv3SumInstance::from_sequence({3, 1, 2});
    auto params = Reduction3SumParams::make(inst);
    auto low = low_level_gadget(inst, params);
    auto diag = diagonal_transform(low.a, low.b, params);

    // A side lands at (x/2, x/2)
    for (std::size_t k = 0; k < low.a.size(); ++k) {
        ExactScalar half = low.a.points[k].x * ExactScalar(Rational(1, 2));
        CHECK(diag.a.points[k] == Point(half, half));
    }

    // number-point gap becomes eps/sqrt(2): squared key eps^2/2
    auto gap = distance_key(diag.a.points[0], diag.a.points[1], Norm::l2());
    CHECK(gap.magnitude == ExactScalar(params.epsilon.pow(2) * Rational(1, 2)));

    // anchor gap becomes 2 + eps/sqrt(2): squared key 4 + eps^2/2 + 2eps*sqrt(2)
    auto anchor_gap = distance_key(diag.b.points[0], diag.b.points[1], Norm::l2());
    ExactScalar expected{Rational(4) + params.epsilon.pow(2) * Rational(1, 2),
                         Rational(2) * params.epsilon};
    CHECK(anchor_gap.magnitude == expected);

    // the B side genuinely lives in Q[sqrt(2)]
    CHECK(!diag.b.points[0].x.is_rational());

    PointSet off_axis;
    off_axis.points = {pt_rational(Rational(0), Rational(1))};
    CHECK_THROWS_AS(diagonal_transform(off_axis, low.b, params), std::invalid_argument);
}

TEST_CASE("translation gadget") {
    auto inst = Conv3SumInstance::from_sequence({5, 2, 4});
    auto params = Reduction3SumParams::make(inst);
    auto g = translation_gadget_3sum(params);
    REQUIRE(g.a.size() == 4);
    REQUIRE(g.b.size() == 1);
    CHECK(g.b.points[0] == pt_rational(Rational(0), Rational(0)));

    // well-behaved at tau = 0
    CHECK(decide_at_translation(g.a, g.b, pt_rational(Rational(0), Rational(0)),
                                ExactScalar(params.delta), Norm::l2(), Direction::Undirected));

    // tau = (eps, -eps) drops below the box and breaks the top point
    CHECK(!decide_at_translation(g.a, g.b, pt_rational(params.epsilon, -params.epsilon),
                                 ExactScalar(params.delta), Norm::l2(), Direction::AToB));
}

TEST_CASE("full reduction sizes and separation") {
    auto inst = Conv3SumInstance::from_sequence({5, 2, 4});
    ReductionOutput red = reduce_conv3sum(inst);
    CHECK(red.a.size() == 9 * 3 + 4);
    CHECK(red.b.size() == 7);
    CHECK(red.norm == Norm::l2());
    CHECK(red.provenance_a.size() == red.a.size());
    CHECK(red.provenance_b.size() == red.b.size());

    // gadgets sit far enough apart that cross-gadget matches are impossible:
    // every cross pair is beyond 2*delta + gadget diameter (< 5).
    auto gadget_of = [](const std::string& tag) { return tag.substr(0, tag.find(':')); };
    ExactScalar bound(25);
    for (std::size_t i = 0; i < red.a.size(); ++i)
        for (std::size_t j = 0; j < red.b.size(); ++j) {
            if (gadget_of(red.provenance_a[i]) == gadget_of(red.provenance_b[j])) continue;
            CHECK(distance_key(red.a.points[i], red.b.points[j], Norm::l2()).magnitude > bound);
        }
}

TEST_CASE("witness translations") {
    auto inst = Conv3SumInstance::from_sequence({2});
    auto params = Reduction3SumParams::make(inst);
    Point w = witness_translation(0, 0, inst, params);
    Rational rho6 = params.rho.pow(6);
    CHECK(w == pt_rational(Rational(2) * rho6, Rational(2) * rho6));
    CHECK_THROWS_AS(witness_translation(0, 1, inst, params), std::out_of_range);

    // positive instance: the witness of the solving pair passes exactly
    auto pos = Conv3SumInstance::from_sequence({5, 2, 4});
    auto pos_params = Reduction3SumParams::make(pos);
    ReductionOutput red = reduce_conv3sum(pos);
    Point good = witness_translation(1, 1, pos, pos_params);
    CHECK(decide_at_translation(red.a, red.b, good, ExactScalar(red.delta), Norm::l2(),
                                Direction::Undirected));

    // negative instance: no claimed pair verifies
    auto neg = Conv3SumInstance::from_sequence({1, 1, 3});
    auto neg_params = Reduction3SumParams::make(neg);
    ReductionOutput red_neg = reduce_conv3sum(neg);
    for (std::size_t i = 0; i < neg.n(); ++i)
        for (std::size_t j = 0; i + j < neg.n(); ++j) {
            Point w_neg = witness_translation(i, j, neg, neg_params);
            CHECK(!decide_at_translation(red_neg.a, red_neg.b, w_neg, ExactScalar(red_neg.delta),
                                         Norm::l2(), Direction::AToB));
        }
}

TEST_CASE("curvature error bound on a grid") {
    // |p_x - (q_x + tau_x)| <= ||p - (q + tau)||_2 <= |...| + 4 n^2 eps^2,
    // checked in squared form to stay exact.
    auto inst = Conv3SumInstance::from_sequence({3, 1, 2});
    auto params = Reduction3SumParams::make(inst);
    long n = static_cast<long>(params.n);
    Rational limit = params.epsilon * Rational(2 * n - 1);
    Rational step = limit / Rational(4);
    Rational slack = Rational(4) * Rational(n * n) * params.epsilon.pow(2);

    for (const Rational& gap : {Rational(1, 2), Rational(1), Rational(2)}) {
        Point p = pt_rational(gap, Rational(5));
        Point q = pt_rational(Rational(0), Rational(5));
        for (Rational tx(0); tx <= limit; tx += step)
            for (Rational ty(0); ty <= limit; ty += step) {
                Point moved = q + pt_rational(tx, ty);
                Rational dx = (p.x - moved.x).rational_part().abs();
                ExactScalar key = distance_key(p, moved, Norm::l2()).magnitude;
                CHECK((key - ExactScalar(dx * dx)).sign() >= 0);
                Rational upper = dx + slack;
                CHECK((ExactScalar(upper * upper) - key).sign() >= 0);
            }
    }
}

TEST_CASE("end-to-end tiny instances match the oracle") {
    auto pos = Conv3SumInstance::from_sequence({5, 2, 4});
    ReductionOutput red = reduce_conv3sum(pos);
    CHECK(decide_translation(red.a, red.b, red.delta, red.norm, Direction::AToB).feasible);

    auto neg = Conv3SumInstance::from_sequence({1, 1, 3});
    ReductionOutput red_neg = reduce_conv3sum(neg);
    CHECK(!decide_translation(red_neg.a, red_neg.b, red_neg.delta, red_neg.norm, Direction::AToB)
               .feasible);
}

}  // TEST_SUITE
