#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hiercon/errors.hpp"
#include "hiercon/rng.hpp"
#include "hiercon/spectral.hpp"
#include "helpers.hpp"

using namespace hiercon;
using hiercon::testing::gershgorin_excess;
using hiercon::testing::max_multiset_distance;
using hiercon::testing::ring_mixed;

TEST_CASE("eigenvalues of triangular and scalar matrices") {
    Matrix t(3, 3);
    t << 2, 0, 0, -1, 5, 0, 4, 0.5, -3;
    CHECK(max_multiset_distance(eigenvalues(t), {{2, 0}, {5, 0}, {-3, 0}}) < 1e-12);

    Matrix one(1, 1);
    one << 4.25;
    CHECK(max_multiset_distance(eigenvalues(one), {{4.25, 0}}) < 1e-15);
}

TEST_CASE("eigenvalues of the four-vertex ring") {
    const Spectrum numeric = eigenvalues(laplacian(ring_mixed(4)).l_total);
    CHECK(max_multiset_distance(numeric, {{0, 0}, {1, 1}, {2, 0}, {1, -1}}) < 1e-10);
}

TEST_CASE("criteria on real and ring spectra") {
    const Spectrum dag{{0, 0}, {1, 0}, {2.5, 0}};
    CHECK(abs_criterion(dag) == 0.0);
    CHECK(rel_criterion(dag) == 0.0);

    const Spectrum ring3{{0, 0}, {1, 1}, {2, 0}, {1, -1}};
    CHECK(abs_criterion(ring3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rel_criterion(ring3) == doctest::Approx(0.5).epsilon(1e-12));

    const Spectrum ring5 = ring_spectrum_closed_form(5);
    CHECK(rel_criterion(ring5) == doctest::Approx(1.5).epsilon(1e-12));
    // max Im^2/Re over the ring equals 1 + cos(2*pi/(s+1)), approaching 2
    CHECK(abs_criterion(ring5) ==
          doctest::Approx(1.0 + std::cos(2.0 * std::numbers::pi / 6)).epsilon(1e-12));
    const double near2 = abs_criterion(ring_spectrum_closed_form(400));
    CHECK(near2 < 2.0);
    CHECK(near2 > 1.999);

    CHECK_THROWS_AS((void)abs_criterion(Spectrum{{0, 0}, {1e-12, 0}}), Error);
}

TEST_CASE("gershgorin_bound arithmetic") {
    CHECK(gershgorin_bound({1, 1, 1.0, 1.0, 1.0}) == 4.0);
    CHECK(gershgorin_bound({3, 0, 0.7, 5.0, 0.7}) == doctest::Approx(4.2));
    CHECK(gershgorin_bound({2, 3, 0.5, 2.0, 1.0}) == 14.0);
}

TEST_CASE("ring closed form matches the numeric spectrum") {
    CHECK(max_multiset_distance(ring_spectrum_closed_form(1), {{0, 0}, {2, 0}}) < 1e-15);
    CHECK(max_multiset_distance(ring_spectrum_closed_form(3),
                                {{0, 0}, {1, 1}, {2, 0}, {1, -1}}) < 1e-15);
    for (int s : {1, 2, 3, 4, 5, 6, 7, 8, 12, 25, 50}) {
        const Spectrum numeric = eigenvalues(laplacian(ring_mixed(s + 1)).l_total);
        CHECK(max_multiset_distance(numeric, ring_spectrum_closed_form(s)) < 1e-8);
    }
}

TEST_CASE("path family relative criterion closed form") {
    CHECK(path_family_rel_criterion(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(path_family_rel_criterion(3) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(path_family_rel_criterion(5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(path_family_rel_criterion(9) == doctest::Approx(4.7360679774997898).epsilon(1e-12));
    for (int s = 2; s <= 60; ++s)
        CHECK(path_family_rel_criterion(s + 1) > path_family_rel_criterion(s));
}

TEST_CASE("star closed form spectra") {
    const MixedGraph star4 = add_reverse_edges(gen_star(4, 1.0), {{1, 3, 2.0}, {2, 4, 0.5}});
    CHECK(max_multiset_distance(star_spectrum_closed_form(star4),
                                {{0, 0}, {3.0, 0}, {1.5, 0}, {1.0, 0}}) < 1e-15);
    CHECK(max_multiset_distance(eigenvalues(laplacian(star4).l_total),
                                {{0, 0}, {3.0, 0}, {1.5, 0}, {1.0, 0}}) < 1e-10);

    const double rho = 1.3, w = 0.7;
    const MixedGraph star3 = add_reverse_edges(gen_star(3, rho), {{2, 3, w}});
    CHECK(max_multiset_distance(star_spectrum_closed_form(star3),
                                {{0, 0}, {rho, 0}, {rho + w, 0}}) < 1e-15);

    const MixedGraph plain{gen_star(5, 2.5), {}};
    CHECK(max_multiset_distance(star_spectrum_closed_form(plain),
                                {{0, 0}, {2.5, 0}, {2.5, 0}, {2.5, 0}, {2.5, 0}}) < 1e-15);

    CHECK_THROWS_AS((void)star_spectrum_closed_form(MixedGraph{gen_path(4, 1.0), {}}), Error);
}

TEST_CASE("star closed form matches the eigensolver on random instances") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        const int n = 3 + static_cast<int>(k % 20);
        std::mt19937_64 rng(derive_seed(9001, k));
        std::uniform_real_distribution<double> rho_dist(0.2, 3.0);
        const MixedGraph m =
            gen_random_star_mixed(n, rho_dist(rng), {0.05, 2.0}, derive_seed(9002, k));
        const Spectrum numeric = eigenvalues(laplacian(m).l_total);
        CHECK(max_multiset_distance(numeric, star_spectrum_closed_form(m)) < 1e-8);
    }
}

TEST_CASE("consensus verdicts") {
    const GainPair unit{1.0, 1.0};

    const auto dag_report = make_spectral_report(MixedGraph{gen_path(5, 1.0), {}});
    CHECK(consensus_verdict(dag_report, unit, Protocol::Absolute).verdict ==
          Verdict::Consensus);
    CHECK(consensus_verdict(dag_report, unit, Protocol::Relative).verdict ==
          Verdict::Consensus);

    const auto ring6 = make_spectral_report(ring_mixed(6));  // s = 5
    const auto rel = consensus_verdict(ring6, unit, Protocol::Relative);
    CHECK(rel.verdict == Verdict::NoConsensus);
    CHECK(rel.margin == doctest::Approx(-0.5).epsilon(1e-9));
    const auto abs = consensus_verdict(ring6, GainPair{1.0, 2.0}, Protocol::Absolute);
    CHECK(abs.verdict == Verdict::Consensus);
    CHECK(abs.margin == doctest::Approx(2.5).epsilon(1e-9));

    SpectralReport boundary;
    boundary.abs_criterion = 1.0;
    boundary.spanning_tree = true;
    CHECK(consensus_verdict(boundary, unit, Protocol::Absolute).verdict == Verdict::Boundary);

    SpectralReport no_tree;
    no_tree.spanning_tree = false;
    CHECK(consensus_verdict(no_tree, GainPair{1.0, 10.0}, Protocol::Absolute).verdict ==
          Verdict::NoConsensus);

    CHECK_THROWS_AS((void)consensus_verdict(no_tree, GainPair{0.0, 1.0}, Protocol::Absolute),
                    Error);
}

TEST_CASE("edgeless graph reports zero criteria and no consensus") {
    const auto report = make_spectral_report(MixedGraph{build_dag(3, {}), {}});
    CHECK(!report.spanning_tree);
    CHECK(report.abs_criterion == 0.0);
    CHECK(consensus_verdict(report, GainPair{1.0, 1.0}, Protocol::Relative).verdict ==
          Verdict::NoConsensus);
}

TEST_CASE("random corpus: conjugate pairing, Gershgorin containment, criterion bound") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const int n = 5 + static_cast<int>(k % 25);
        const MixedGraph m = gen_random_mixed_capped(
            n, 0.2, 1 + static_cast<int>(k % 3), 1 + static_cast<int>((k / 3) % 3),
            {0.05, 2.0}, derive_seed(2024, k));
        const Matrix l = laplacian(m).l_total;
        const Spectrum spectrum = eigenvalues(l);

        Spectrum conj;
        for (const Complex& ev : spectrum) conj.push_back(std::conj(ev));
        CHECK(max_multiset_distance(spectrum, conj) < 1e-10);

        int near_zero = 0;
        for (const Complex& ev : spectrum) {
            CHECK(gershgorin_excess(l, ev) <= 1e-8);
            if (std::abs(ev) <= 1e-8)
                ++near_zero;
            else
                CHECK(ev.real() > 0.0);
        }
        CHECK(near_zero == 1);  // spanning tree: simple zero eigenvalue

        CHECK(abs_criterion(spectrum) <= gershgorin_bound(assumption_params(m)) + 1e-8);
    }
}

TEST_CASE("scaling all weights by c scales the spectrum and criteria") {
    const double c = 2.5;
    const MixedGraph m = gen_random_mixed(9, 0.3, 6, {0.2, 1.4}, 5150);
    MixedGraph scaled = m;
    for (Edge& e : scaled.base.dag_edges) e.weight *= c;
    for (Edge& e : scaled.reverse_edges) e.weight *= c;

    const Spectrum base = eigenvalues(laplacian(m).l_total);
    Spectrum base_times_c;
    for (const Complex& ev : base) base_times_c.push_back(ev * c);
    const Spectrum big = eigenvalues(laplacian(scaled).l_total);
    CHECK(max_multiset_distance(big, base_times_c) < 1e-8);

    CHECK(abs_criterion(big) == doctest::Approx(c * abs_criterion(base)).epsilon(1e-8));
    CHECK(rel_criterion(big) == doctest::Approx(rel_criterion(base) / c).epsilon(1e-8));
}
