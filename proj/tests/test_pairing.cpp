#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "phonoscope/lattice.hpp"
#include "phonoscope/pairing.hpp"

using namespace phonoscope;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent double-loop counter for the significance window.
std::size_t window_oracle(const BandModel& band, const std::vector<double>& ks,
                          const std::vector<double>& qs, double omega, double rho) {
    std::size_t count = 0;
    for (double k : ks)
        for (double q : qs) {
            const double de = band_energy(k, band) - band_energy(k + q, band);
            if (std::abs(de) <= rho * omega) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("effective interaction arithmetic") {
    SUBCASE("delta = 0, omega = 2, |M|^2 = 1 gives -0.5 (attractive)") {
        CHECK(effective_interaction(1.0, 1.0, 2.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    }
    SUBCASE("|delta| = homega hits the pole guard") {
        CHECK_THROWS_AS(effective_interaction(2.0, 1.0, 1.0, 1.0), PoleError);
    }
    SUBCASE("delta = 10, omega = 1 gives the small repulsive 1/99") {
        CHECK(effective_interaction(10.0, 0.0, 1.0, 1.0) ==
              doctest::Approx(1.0 / 99.0).epsilon(1e-13));
    }
}

TEST_CASE("sign law: attractive exactly inside the phonon energy window") {
    for (double delta : {0.0, 0.3, 0.7, 0.99, 1.01, 1.5, 10.0}) {
        const double omega = 1.0;
        if (std::abs(delta * delta - omega * omega) < 1e-6) continue;  // pole guard zone
        const double v = effective_interaction(delta, 0.0, omega, 2.0);
        CHECK((v < 0.0) == (std::abs(delta) < omega));
    }
}

TEST_CASE("interaction is even in delta eps") {
    for (double delta : {0.2, 0.8, 3.0}) {
        const double plus = effective_interaction(delta, 0.0, 1.1, 1.0);
        const double minus = effective_interaction(-delta, 0.0, 1.1, 1.0);
        CHECK(plus == minus);
    }
}

TEST_CASE("band_energy across the model kinds") {
    BandModel tb;
    tb.kind = BandModel::Kind::tightbinding;
    CHECK(band_energy(kPi / 2.0, tb) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(band_energy(0.0, tb) == doctest::Approx(-2.0).epsilon(1e-14));

    BandModel para;
    para.kind = BandModel::Kind::parabolic;
    CHECK(band_energy(0.0, para) == 0.0);
    CHECK(band_energy(2.0, para) == doctest::Approx(2.0).epsilon(1e-14));

    BandModel table;
    table.kind = BandModel::Kind::table;
    table.table = {{0.0, -1.5}, {kPi, 2.5}};
    CHECK(band_energy(0.0, table) == -1.5);
    CHECK(band_energy(kPi, table) == 2.5);
    CHECK(band_energy(2.0 * kPi, table) == -1.5);  // canonicalized mod 2 pi
    CHECK_THROWS_AS(band_energy(1.0, table), std::out_of_range);
}

TEST_CASE("band model parsing") {
    const BandModel tb = BandModel::parse("tightbinding:t=2,mu=0.5");
    CHECK(tb.kind == BandModel::Kind::tightbinding);
    CHECK(tb.hopping == 2.0);
    CHECK(tb.mu == 0.5);

    const BandModel para = BandModel::parse("parabolic:mstar=0.8,mu=0");
    CHECK(para.kind == BandModel::Kind::parabolic);
    CHECK(para.eff_mass == 0.8);

    CHECK_THROWS_AS(BandModel::parse("nonsense:x=1"), std::invalid_argument);
    CHECK_THROWS_AS(BandModel::parse("tightbinding:bogus=1"), std::invalid_argument);
}

TEST_CASE("flat band: every pair attractive with V = -|M|^2 / homega") {
    BandModel flat;
    flat.kind = BandModel::Kind::tightbinding;
    flat.hopping = 0.0;
    const std::vector<double> ks = lattice_kgrid(8);
    const auto scan = attractive_channels(
        flat, ks, ks, [](double) { return 0.5; }, [](double) { return 1.0; }, 0.5);
    CHECK(scan.scanned == 64);
    CHECK(scan.attractive_count == 64);
    CHECK(scan.attractive_fraction == 1.0);
    CHECK(scan.entries.size() == 64);
    for (const auto& e : scan.entries)
        CHECK(e.v_eff == doctest::Approx(-1.0 / 0.5).epsilon(1e-13));
}

TEST_CASE("tight-binding window count matches the double-loop oracle") {
    BandModel tb;
    tb.kind = BandModel::Kind::tightbinding;
    const std::vector<double> ks = lattice_kgrid(16);
    const double omega = 0.5, rho = 0.5;
    const auto scan = attractive_channels(
        tb, ks, ks, [&](double) { return omega; }, [](double) { return 1.0; }, rho);
    CHECK(scan.entries.size() == window_oracle(tb, ks, ks, omega, rho));
    for (const auto& e : scan.entries) {
        CHECK(std::abs(e.delta_eps) <= rho * omega);
        if (!e.pole) CHECK(e.attractive);
    }
    // Entries come out sorted most attractive first.
    for (std::size_t i = 1; i < scan.entries.size(); ++i)
        CHECK(scan.entries[i - 1].v_eff <= scan.entries[i].v_eff);
}

TEST_CASE("kept-entry count is nondecreasing in rho") {
    BandModel tb;
    tb.kind = BandModel::Kind::tightbinding;
    const std::vector<double> ks = lattice_kgrid(12);
    std::size_t previous = 0;
    for (double rho : {0.2, 0.5, 0.8}) {
        const auto scan = attractive_channels(
            tb, ks, ks, [](double) { return 0.8; }, [](double) { return 1.0; }, rho);
        CHECK(scan.entries.size() >= previous);
        previous = scan.entries.size();
    }
}

TEST_CASE("pole hits are flagged entries, not failures") {
    // Flat band with rho -> 1 and a tiny omega paired against a huge pole
    // guard forces guard hits inside the window.
    BandModel flat;
    flat.kind = BandModel::Kind::tightbinding;
    flat.hopping = 0.0;
    const std::vector<double> ks = lattice_kgrid(4);
    const auto scan = attractive_channels(
        flat, ks, ks, [](double) { return 1.0; }, [](double) { return 1.0; }, 0.9, 1.0,
        /*pole_guard=*/2.0);
    CHECK(scan.pole_hits == scan.entries.size());
    for (const auto& e : scan.entries) CHECK(e.pole);
}

TEST_CASE("worker count does not change the scan") {
    BandModel tb;
    tb.kind = BandModel::Kind::tightbinding;
    const std::vector<double> ks = lattice_kgrid(24);
    const auto one = attractive_channels(
        tb, ks, ks, [](double) { return 0.6; }, [](double) { return 1.0; }, 0.7, 1.0, 1e-6, 1);
    const auto four = attractive_channels(
        tb, ks, ks, [](double) { return 0.6; }, [](double) { return 1.0; }, 0.7, 1.0, 1e-6, 4);
    REQUIRE(one.entries.size() == four.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
        CHECK(one.entries[i].k == four.entries[i].k);
        CHECK(one.entries[i].q == four.entries[i].q);
        CHECK(one.entries[i].v_eff == four.entries[i].v_eff);
    }
}

TEST_CASE("invalid scan parameters are rejected") {
    BandModel tb;
    const std::vector<double> ks = lattice_kgrid(4);
    auto omega = [](double) { return 1.0; };
    auto m2 = [](double) { return 1.0; };
    CHECK_THROWS_AS(attractive_channels(tb, ks, ks, omega, m2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(attractive_channels(tb, ks, ks, omega, m2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(attractive_channels(tb, {}, ks, omega, m2, 0.5), std::invalid_argument);
}

TEST_CASE("table bands load from CSV files") {
    const std::string path = "band_table_test.csv";
    {
        std::ofstream out(path);
        out.precision(17);
        out << "k,eps\n0.0,-1.0\n" << kPi << ",1.0\n";
    }
    const BandModel band = BandModel::parse("table:" + path);
    CHECK(band_energy(0.0, band) == -1.0);
    CHECK(band_energy(kPi, band) == 1.0);
    std::remove(path.c_str());
}
