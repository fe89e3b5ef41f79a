// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "homposet/epimorphism.hpp"
#include "homposet/hom_z.hpp"
#include "homposet/oracle.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

using namespace homposet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok;
    std::string detail;
};

bool claim_passed(const oracle::Report& report, const std::string& id, std::string& detail) {
    const auto* c = report.find(id);
    if (c == nullptr) {
        detail += id + " missing; ";
        return false;
    }
    detail += id + " " + std::to_string(c->checks - c->failures) + "/" + std::to_string(c->checks) + "; ";
    if (!c->witnesses.empty()) detail += "first witness: " + c->witnesses.front() + "; ";
    return c->passed() && c->checks > 0;
}

Outcome criterion_1() {
    const auto start = Clock::now();
    const auto ring = make_matrix_ring(make_zmod(2), 2);
    const auto poset = hom_poset(ring);
    const double t = seconds_since(start);
    bool ok = poset.size() == 1 && poset.pairs()[0].ideal.members.count() == 1 &&
              poset.pairs()[0].mset.members == units(ring).members && units(ring).members.count() == 6 && t < 1.0;
    return {ok, "|Hom(M2(F2))| = " + std::to_string(poset.size()) + ", |U| = " +
                    std::to_string(units(ring).members.count()) + ", " + std::to_string(t) + " s"};
}

Outcome criterion_2(const oracle::Report& report, double battery_seconds) {
    std::string detail;
    bool ok = claim_passed(report, "hom-construction", detail);
    ok = ok && report.ring_count > 0 && battery_seconds < 60.0 && report.all_passed();
    detail += std::to_string(report.ring_count) + " rings, full battery " + std::to_string(battery_seconds) + " s, " +
              (report.all_passed() ? "all claims pass" : "some claim fails");
    return {ok, detail};
}

Outcome criterion_3(const oracle::Report& report) {
    std::string detail;
    bool ok = claim_passed(report, "pair-invariants", detail);
    ok = claim_passed(report, "non-cancellative-witness", detail) && ok;
    return {ok, detail};
}

Outcome criterion_4(const oracle::Report& report) {
    std::string detail;
    bool ok = claim_passed(report, "spectrum", detail);
    const bool z4 = hom_poset(make_zmod(4)).greatest().has_value();
    const bool z6 = hom_poset(make_zmod(6)).greatest().has_value();
    ok = ok && z4 && !z6;
    detail += std::string("Z/4 greatest: ") + (z4 ? "yes" : "no") + ", Z/6 greatest: " + (z6 ? "yes" : "no");
    return {ok, detail};
}

Outcome criterion_5(const oracle::Report& report) {
    std::string detail;
    bool ok = claim_passed(report, "bounded-lattice", detail);
    const auto iso = product_decompose_poset(make_zmod(4), make_zmod(9), {64, 64});
    ok = ok && iso.order_isomorphism && iso.product.size() == 9 && iso.left.size() * iso.right.size() == 9;
    detail += "|Hom-bar(Z/4 x Z/9)| = " + std::to_string(iso.product.size()) + " = " + std::to_string(iso.left.size()) +
              " * " + std::to_string(iso.right.size());
    return {ok, detail};
}

Outcome criterion_6(const oracle::Report& report) {
    std::string detail;
    return {claim_passed(report, "universal-inverting", detail), detail};
}

Outcome criterion_7(const oracle::Report& report) {
    std::string detail;
    bool ok = claim_passed(report, "canonical-factorization", detail);
    ok = claim_passed(report, "epi-criterion", detail) && ok;
    const auto f = enumerate_morphisms(make_zmod(2), make_finite_field(2, 2)).front();
    const auto group = tensor_cokernel(f);
    ok = ok && !is_ring_epimorphism(f) && group.order() == 4;
    detail += "F2 -> F4 tensor group " + group.describe();
    return {ok, detail};
}

Outcome criterion_8() {
    using namespace zhom;
    std::mt19937_64 rng(8);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= 100; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    auto random_element = [&]() {
        const auto kind = rng() % 3;
        if (kind == 0) return z_modular(2 + rng() % 9999);
        if (kind == 1) {
            // Products of small primes exercise the divisibility rules.
            std::uint64_t n = 1;
            while (n < 2 || rng() % 3 != 0) {
                const auto p = primes[rng() % 6];
                if (n * p > 10000) break;
                n *= p;
            }
            return z_modular(std::max<std::uint64_t>(n, 2));
        }
        std::vector<std::uint64_t> chosen;
        for (auto p : primes) {
            if (rng() % 10 == 0) chosen.push_back(p);
        }
        return rng() % 2 ? z_zero_kernel(PrimeSet::finite(chosen)) : z_zero_kernel(PrimeSet::cofinite(chosen));
    };
    std::size_t pairs = 0, agree = 0, related = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_element();
        const auto y = random_element();
        ++pairs;
        const bool rule = z_leq(x, y);
        related += rule ? 1 : 0;
        if (rule == rho(y).pointwise_leq(rho(x))) ++agree;
    }

    // Least element and maximal elements of Hom(Z).
    const auto least = z_zero_kernel(PrimeSet::all());
    const auto maximal_zero = z_zero_kernel(PrimeSet::empty());
    bool extremes = true;
    std::vector<Element> probe{maximal_zero, least, z_zero_kernel(PrimeSet::finite({2, 3})),
                               z_zero_kernel(PrimeSet::cofinite({7}))};
    for (std::uint64_t n = 2; n <= 200; ++n) probe.push_back(z_modular(n));
    for (const auto& x : probe) {
        extremes = extremes && z_leq(least, x);
        bool has_strict_upper = false;
        for (const auto& y : probe) has_strict_upper = has_strict_upper || (z_leq(x, y) && !(x == y));
        const bool expected_maximal = x == maximal_zero || (x.is_modular() && is_prime(x.modulus()));
        extremes = extremes && (has_strict_upper != expected_maximal);
    }
    const bool ok = agree == pairs && extremes && related > 0;
    return {ok, std::to_string(agree) + "/" + std::to_string(pairs) + " grid pairs agree (" + std::to_string(related) +
                    " related); least/maximal elements " + (extremes ? "match" : "differ")};
}

Outcome criterion_9(const oracle::Report& report) {
    std::string detail;
    bool ok = claim_passed(report, "direct-limit", detail);
    auto f2 = make_finite_field(2, 1);
    auto f4 = make_finite_field(2, 2);
    auto f16 = make_finite_field(2, 4);
    const auto fields = verify_direct_limit(
        {f2, f4, f16}, {enumerate_morphisms(f2, f4).front(), enumerate_morphisms(f4, f16).front()});
    auto z4 = make_zmod(4);
    auto z2 = make_zmod(2);
    const auto ints = verify_direct_limit({z4, z2}, {enumerate_morphisms(z4, z2).front()});
    ok = ok && fields.isomorphism() && ints.isomorphism();
    detail += std::string("F2->F4->F16 ") + (fields.isomorphism() ? "iso" : "not iso") + ", Z/4->Z/2 " +
              (ints.isomorphism() ? "iso" : "not iso");
    return {ok, detail};
}

Outcome criterion_10(const oracle::Report& report) {
    std::string detail;
    return {claim_passed(report, "sigma-implies-rho", detail), detail};
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const auto catalog = oracle::Catalog::generate(16, oracle::Options{}.limits);
    const auto report = oracle::verify_theorems(catalog);
    const double battery = seconds_since(start);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Hom(M2(F2)) is the single pair (0, U), |U| = 6, under 1 s", criterion_1},
        {"realized pairs equal Hom(R) on the bound-16 catalog, battery under 60 s", [&] { return criterion_2(report, battery); }},
        {"pair invariants on every realized pair; Z/6 non-cancellative witness", [&] { return criterion_3(report); }},
        {"maximal elements match primes; greatest element iff unique prime", [&] { return criterion_4(report); }},
        {"bounded-lattice axioms; |Hom-bar(Z/4 x Z/9)| = 9", [&] { return criterion_5(report); }},
        {"unique factorization through the universal inverting ring", [&] { return criterion_6(report); }},
        {"canonical factorization; F2 -> F4 is not an epimorphism", [&] { return criterion_7(report); }},
        {"Hom(Z) order rules agree with rho on 1000 grid pairs", criterion_8},
        {"Hom of a direct limit is the inverse limit of Hom", [&] { return criterion_9(report); }},
        {"sigma implies rho on all composable catalog pairs", [&] { return criterion_10(report); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out{false, ""};
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += out.ok ? 0 : 1;
        std::printf("criterion %2zu: %s  %s [%s]\n", i + 1, out.ok ? "PASS" : "FAIL", criteria[i].first,
                    out.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
