#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abst/io.hpp"
#include "abst/solver.hpp"
#include "abst/witness.hpp"

using namespace abst;

TEST_CASE("fnv1a-64 test vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("certificate text round trip") {
    Certificate cert{3, 10, 5, 2, 2, 0x0123456789abcdefULL, 42};
    const Certificate back = parse_certificate(serialize_certificate(cert));
    CHECK(back == cert);
}

TEST_CASE("certificate parse errors") {
    CHECK_THROWS_AS(parse_certificate("cert 2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("cert 1\nn 3\n"), ParseError);
    CHECK_THROWS_AS(
        parse_certificate("cert 1\nn 3\nm 1\nseed 1\np 2\n"
                          "optimum-at-least 2\ndigest xyz\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_certificate("cert 1\nbogus 3\n"), ParseError);
}

TEST_CASE("hunt finds and certifies an n=3 witness") {
    const HuntResult result = hunt(3, 10, 1, 10);
    REQUIRE(result.certificate.has_value());
    const Certificate cert = *result.certificate;
    CHECK(cert.p == 2);
    CHECK(cert.optimum_at_least == 2);
    CHECK(cert.n == 3);
    CHECK(cert.m == 10);

    const VerifyResult check = verify(cert);
    CHECK(check.ok);

    // reproducibility: the same hunt finds the same certificate
    const HuntResult again = hunt(3, 10, 1, 10);
    REQUIRE(again.certificate.has_value());
    CHECK(*again.certificate == cert);
    CHECK(again.trials.size() == result.trials.size());
}

TEST_CASE("parallel hunt reports the smallest successful seed") {
    const HuntResult serial = hunt(3, 10, 1, 10, 1);
    const HuntResult parallel = hunt(3, 10, 1, 10, 4);
    REQUIRE(serial.certificate.has_value());
    REQUIRE(parallel.certificate.has_value());
    CHECK(*serial.certificate == *parallel.certificate);
}

TEST_CASE("p = 1 certifies immediately") {
    const HuntResult result = hunt(2, 3, 1, 5);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->optimum_at_least == 1);
    CHECK(result.trials.size() == 1);
    CHECK(verify(*result.certificate).ok);
}

TEST_CASE("tampered seed is caught by the digest") {
    const HuntResult result = hunt(3, 10, 1, 10);
    REQUIRE(result.certificate.has_value());
    Certificate tampered = *result.certificate;
    tampered.seed += 1;
    CHECK_THROWS_AS(verify(tampered), DigestError);
}

TEST_CASE("a false claim is refuted with a counterexample") {
    // find a seed where some singleton absorbs the whole n=3 instance
    for (std::uint64_t seed = 1;; ++seed) {
        REQUIRE(seed < 2000);
        const auto [t, layout] = generate({3, 2, seed});
        const AbsorptionRelation rel = absorbed_by(t);
        const SizeQueryResult q = exists_absorbing_of_size(rel, 1);
        if (q.decision != SizeDecision::Found) continue;
        Certificate forged{3, 2, seed, 2, 2, fnv1a64(serialize(t, &layout)), 0};
        const VerifyResult check = verify(forged);
        CHECK_FALSE(check.ok);
        CHECK(check.counterexample.size() == 1);
        CHECK(is_absorbing(rel, check.counterexample));
        break;
    }
}

TEST_CASE("verify accepts a stored instance matching the digest") {
    const HuntResult result = hunt(3, 10, 1, 10);
    REQUIRE(result.certificate.has_value());
    const auto [t, layout] = generate({3, 10, result.certificate->seed});
    CHECK(verify(*result.certificate, &t, &layout).ok);

    // flipping any single arc line changes the digest
    const std::vector<Arc> arcs = t.arcs();
    for (std::size_t i = 0; i < arcs.size(); i += 37) {
        std::vector<Arc> flipped = arcs;
        std::swap(flipped[i].tail, flipped[i].head);
        const auto bad = ColouredTournament::build(t.vertex_count(),
                                                   t.colour_count(), flipped);
        CHECK(fnv1a64(serialize(bad, &layout)) != result.certificate->instance_digest);
        CHECK_THROWS_AS(verify(*result.certificate, &bad, &layout), DigestError);
    }
}

TEST_CASE("inconsistent certificates are rejected") {
    Certificate bad{3, 10, 1, 5, 2, 0, 0};  // p must be 2 for n = 3
    CHECK_FALSE(verify(bad).ok);
    Certificate bad2{3, 10, 1, 2, 3, 0, 0};  // optimum-at-least > p
    CHECK_FALSE(verify(bad2).ok);
}

TEST_CASE("hunt refuses infeasible refutations") {
    // n = 5 gives p = 6; the exhaustive size-5 check blows the guard
    CHECK_THROWS_AS(hunt(5, 300, 1, 1), GuardError);
}
