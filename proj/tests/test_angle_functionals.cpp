#include <catch2/catch_amalgamated.hpp>

#include "hypdel/angle_functionals.hpp"
#include "hypdel/generate.hpp"
#include "test_support.hpp"

using namespace hypdel;

TEST_CASE("face functionals on simple corner data")
{
    SECTION("symmetric corners pi/5")
    {
        AngleSystem x = AngleSystem::constant(1, pi / 5.0);
        SurfaceComplex dummy;  // face_functionals does not need the complex
        auto r = face_functionals(x, 0);
        CHECK(r.sigma == Catch::Approx(3.0 * pi / 5.0).margin(1e-15));
        CHECK(r.k == Catch::Approx(-2.0 * pi / 5.0).margin(1e-15));
        for (int i = 0; i < 3; ++i) {
            CHECK(r.psi_corner[i] == Catch::Approx(pi / 10.0).margin(1e-15));
            CHECK(r.theta_corner[i] == Catch::Approx(2.0 * pi / 5.0).margin(1e-15));
        }
    }
    SECTION("asymmetric corners, psi may be negative")
    {
        AngleSystem x(std::vector<double>{pi / 2.0, pi / 4.0, pi / 8.0});
        auto r = face_functionals(x, 0);
        CHECK(r.sigma == Catch::Approx(7.0 * pi / 8.0).margin(1e-15));
        CHECK(r.k == Catch::Approx(-pi / 8.0).margin(1e-15));
        CHECK(r.psi_corner[0] == Catch::Approx(-pi / 16.0).margin(1e-15));
        // theta_corner[i] = alpha_i - k/2 agrees with (pi + A - B - C)/2
        for (int i = 0; i < 3; ++i) {
            double a = x.values[i], b = x.values[(i + 1) % 3], c = x.values[(i + 2) % 3];
            CHECK(r.theta_corner[i] == Catch::Approx((pi + a - b - c) / 2.0).margin(1e-14));
        }
    }
    SECTION("psi corners of realizable faces stay in (-pi/2, pi/2)")
    {
        Rng rng(21);
        for (int trial = 0; trial < 1000; ++trial) {
            AngleSystem x(test::random_realizable_face(rng));
            auto r = face_functionals(x, 0);
            for (int i = 0; i < 3; ++i) {
                CHECK(r.psi_corner[i] > -pi / 2.0);
                CHECK(r.psi_corner[i] < pi / 2.0);
            }
        }
    }
}

TEST_CASE("edge and vertex functionals")
{
    auto c = build_complex(6, genus2_one_vertex_gluing());
    SECTION("all corners pi/9 on the genus-2 complex")
    {
        AngleSystem x = AngleSystem::constant(6, pi / 9.0);
        auto r = edge_and_vertex_functionals(x, c);
        for (int e = 0; e < c.edge_count(); ++e) {
            CHECK(r.psi_e[e] == Catch::Approx(pi / 9.0).margin(1e-14));
            CHECK(r.theta_e[e] == Catch::Approx(8.0 * pi / 9.0).margin(1e-14));
        }
        REQUIRE(r.r_v.size() == 1);
        CHECK(r.r_v[0] == Catch::Approx(2.0 * pi).margin(1e-13));
    }
    SECTION("all corners pi/5 on the tetrahedron boundary")
    {
        auto tc = build_complex(4, tetrahedron_gluing());
        AngleSystem x = AngleSystem::constant(4, pi / 5.0);
        auto r = edge_and_vertex_functionals(x, tc);
        for (double v : r.psi_e) CHECK(v == Catch::Approx(pi / 5.0).margin(1e-14));
        for (double v : r.r_v) CHECK(v == Catch::Approx(3.0 * pi / 5.0).margin(1e-14));
    }
    SECTION("conformal moves preserve Psi and r^v")
    {
        Rng rng(22);
        for (int trial = 0; trial < 50; ++trial) {
            AngleSystem x = sample_interior_angle_system(c, rng);
            ConformalVector b = ConformalVector::zero(c.edge_count());
            for (double& v : b.coefficients) v = rng.uniform(-0.3, 0.3);
            AngleSystem y = conformal_move(x, b, c);
            auto rx = edge_and_vertex_functionals(x, c);
            auto ry = edge_and_vertex_functionals(y, c);
            for (int e = 0; e < c.edge_count(); ++e)
                CHECK(std::fabs(rx.psi_e[e] - ry.psi_e[e]) <= 1e-12);
            for (int v = 0; v < c.vertex_count; ++v)
                CHECK(std::fabs(rx.r_v[v] - ry.r_v[v]) <= 1e-12);
        }
    }
    SECTION("zero move is the identity")
    {
        AngleSystem x = AngleSystem::constant(6, pi / 7.0);
        AngleSystem y = conformal_move(x, ConformalVector::zero(c.edge_count()), c);
        CHECK(x.values == y.values);
    }
}

TEST_CASE("conformal basis spans the kernel of Psi")
{
    auto c = build_complex(6, genus2_one_vertex_gluing());
    int E = c.edge_count(), n = c.side_count();

    // each w_e maps to zero
    for (int e = 0; e < E; ++e) {
        ConformalVector b = ConformalVector::zero(E);
        b.coefficients[e] = 1.0;
        std::vector<double> w(n, 0.0);
        accumulate_conformal(w, b, c);
        auto p = psi_map(AngleSystem(w), c);
        for (double v : p.psi) CHECK(std::fabs(v) <= 1e-13);
    }

    // the w_e matrix has rank E and Psi has rank E
    std::vector<std::vector<double>> wcols;
    for (int e = 0; e < E; ++e) {
        ConformalVector b = ConformalVector::zero(E);
        b.coefficients[e] = 1.0;
        std::vector<double> w(n, 0.0);
        accumulate_conformal(w, b, c);
        wcols.push_back(w);
    }
    CHECK(test::matrix_rank(wcols) == E);

    std::vector<std::vector<double>> psirows;
    for (int slot = 0; slot < n; ++slot) {
        std::vector<double> unit(n, 0.0);
        unit[slot] = 1.0;
        auto p = psi_map(AngleSystem(unit), c);
        psirows.push_back(p.psi);  // column of Psi
    }
    CHECK(test::matrix_rank(psirows) == E);
}

TEST_CASE("target checks")
{
    auto c = build_complex(6, genus2_one_vertex_gluing());
    SECTION("symmetric target is Delaunay and non-singular")
    {
        auto p = EdgeTarget::constant(9, pi / 9.0);
        auto r = check_target(p, c);
        CHECK(r.delaunay);
        CHECK(r.nonsingular);
        CHECK(r.cone_angles[0] == Catch::Approx(2.0 * pi).margin(1e-12));
    }
    SECTION("psi = pi fails the open Delaunay condition")
    {
        auto p = EdgeTarget::constant(9, pi / 9.0);
        p.psi[4] = pi;
        CHECK_FALSE(check_target(p, c).delaunay);
    }
    SECTION("cone angles of Psi(x) equal r^v(x)")
    {
        Rng rng(23);
        for (const auto& gluing :
             {genus2_one_vertex_gluing(), genus2_two_vertex_gluing(), tetrahedron_gluing()}) {
            auto cc = build_complex(static_cast<int>(gluing.size()) * 2 / 3, gluing);
            for (int trial = 0; trial < 20; ++trial) {
                AngleSystem x = sample_interior_angle_system(cc, rng);
                auto ev = edge_and_vertex_functionals(x, cc);
                auto chk = check_target(ev.psi_of_x, cc);
                for (int v = 0; v < cc.vertex_count; ++v)
                    CHECK(std::fabs(chk.cone_angles[v] - ev.r_v[v]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("brute-force feasibility")
{
    auto c = build_complex(6, genus2_one_vertex_gluing());
    SECTION("symmetric genus-2 target is feasible")
    {
        auto r = feasibility_bruteforce(EdgeTarget::constant(9, pi / 9.0), c);
        CHECK(r.feasible);
        CHECK(r.margin > 0.0);
        CHECK_FALSE(r.witness.has_value());
    }
    SECTION("round-trip targets on the one-vertex complex are feasible")
    {
        Rng rng(24);
        for (int trial = 0; trial < 25; ++trial) {
            auto p = sample_roundtrip_target(c, rng);
            CHECK(feasibility_bruteforce(p, c).feasible);
        }
    }
    SECTION("constructed two-vertex instance is infeasible with a singleton witness")
    {
        auto c2 = build_complex(8, genus2_two_vertex_gluing());
        auto p = infeasible_two_vertex_target(c2);
        REQUIRE(check_target(p, c2).delaunay);
        auto r = feasibility_bruteforce(p, c2);
        CHECK_FALSE(r.feasible);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == std::vector<int>{0});
    }
    SECTION("non-Delaunay targets are rejected")
    {
        auto p = EdgeTarget::constant(9, pi / 9.0);
        p.psi[0] = 3.2;
        CHECK_THROWS_AS(feasibility_bruteforce(p, c), Error);
    }
}

TEST_CASE("subset identity holds to machine precision")
{
    auto c = build_complex(6, genus2_one_vertex_gluing());
    Rng rng(25);
    SECTION("full set has no outside terms")
    {
        AngleSystem x = sample_interior_angle_system(c, rng);
        auto r = subset_theta_identity(x, {0, 1, 2, 3, 4, 5}, c);
        double ksum = 0.0;
        for (int f = 0; f < 6; ++f) ksum += face_functionals(x, f).k;
        CHECK(r.rhs == Catch::Approx(6.0 * pi - ksum / 2.0).margin(1e-12));
        CHECK(std::fabs(r.lhs - r.rhs) <= 1e-12);
    }
    SECTION("1000 random subsets on random angle vectors")
    {
        for (int trial = 0; trial < 1000; ++trial) {
            AngleSystem x(std::vector<double>(c.side_count()));
            for (double& v : x.values) v = rng.uniform(0.01, 2.0);
            std::vector<int> subset;
            for (int f = 0; f < c.face_count; ++f)
                if (rng.uniform() < 0.5) subset.push_back(f);
            if (subset.empty()) subset.push_back(rng.uniform_int(c.face_count));
            auto r = subset_theta_identity(x, subset, c);
            CHECK(std::fabs(r.lhs - r.rhs) <= 1e-12);
        }
    }
}
