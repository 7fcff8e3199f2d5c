#include "logchern/certify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace logchern;

namespace {

bool all_match(const std::vector<Certificate>& certs) {
    return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.match; });
}

const Certificate& find_cert(const std::vector<Certificate>& certs, const std::string& stage) {
    for (const auto& c : certs)
        if (c.stage == stage) return c;
    FAIL("missing certificate " + stage);
    return certs.front();
}

} // namespace

TEST_CASE("all display stages verify") {
    Verifier v;
    auto certs = v.verify_stages();
    REQUIRE(certs.size() == 7);
    REQUIRE(all_match(certs));
    REQUIRE(v.recorded_c7_sign() == -1);
    REQUIRE(find_cert(certs, "c8_display").note.empty());
}

TEST_CASE("the 7th class vanishes, also at truncation 14") {
    for (int trunc : {16, 14}) {
        VerifyOptions opts;
        opts.truncation = trunc;
        Verifier v(opts);
        auto certs = v.verify_c7();
        INFO("truncation " << trunc);
        REQUIRE(all_match(certs));
        REQUIRE(find_cert(certs, "c7_vanishing").computed == "0");
    }
}

TEST_CASE("the 8th class vanishes with fiber scalar -3") {
    Verifier v;
    auto certs = v.verify_c8();
    REQUIRE(all_match(certs));
    REQUIRE(find_cert(certs, "c8_rehouse_residual").computed == "81*xi^2*beta^2");
    REQUIRE(find_cert(certs, "fiber_scalar").computed == "-3");
    REQUIRE(find_cert(certs, "kernel_axiom").computed.find("assumed") != std::string::npos);
    // the reduced pushforward preimage has the expected seventeen terms
    const Certificate& x = find_cert(certs, "ch8van_nf");
    Polynomial truth = parse(x.computed, v.model().btilde().ring());
    REQUIRE(truth.term_count() == 17);
}

TEST_CASE("fiber restriction of the verified class stays zero") {
    // specialization of zero is zero: rehouse and reduce in the fiber model
    Verifier v;
    REQUIRE(all_match(v.verify_stages()));
    BlowupModel fib = v.model().fiber();
    MixedModel mx;
    Polynomial total = mixed_log_cotangent_total(mx, parse(bundled::cF_display, mx.sym_ring()));
    S2Class c7 = v.model().fiber_restrict(mx.to_pair(total.graded_piece(14), v.model()));
    S2Class housed = fib.rehouse(c7);
    REQUIRE(housed.p.is_zero());
    REQUIRE(fib.btilde().nf(housed.q).is_zero());
}

TEST_CASE("negative control: a flipped display coefficient is caught") {
    // 108*alpha*J2 -> 109*alpha*J2 in the 7th-class display
    VerifyOptions opts;
    std::string c7 = opts.claims.c7;
    auto pos = c7.find("108*alpha*J2");
    REQUIRE(pos != std::string::npos);
    c7.replace(pos, 3, "109");
    opts.claims.c7 = c7;
    Verifier v(opts);
    auto certs = v.verify_c7();
    REQUIRE_FALSE(all_match(certs));
    const Certificate& cd = find_cert(certs, "c7_display");
    REQUIRE_FALSE(cd.match);
    // fail-closed: the conclusion refuses to report success
    REQUIRE_FALSE(find_cert(certs, "c7_vanishing").match);
}

TEST_CASE("negative control: perturbed mu breaks the rewrite step") {
    VerifyOptions opts;
    std::string mu = opts.claims.mu;
    auto pos = mu.find("27*beta^2");
    REQUIRE(pos != std::string::npos);
    mu.replace(pos, 2, "26");
    opts.claims.mu = mu;
    Verifier v(opts);
    auto certs = v.verify_c8();
    REQUIRE_FALSE(all_match(certs));
    const Certificate& c = find_cert(certs, "c8_mu_rewrite");
    REQUIRE_FALSE(c.match);
    REQUIRE_FALSE(c.diff.empty()); // term-level diff reported
}

TEST_CASE("negative control: corrupted ring relation flags the first stage") {
    VerifyOptions opts;
    std::string pres = bundled::b_presentation;
    auto pos = pres.find("u^3 + alpha*u + beta");
    REQUIRE(pos != std::string::npos);
    pres.replace(pos, 20, "u^3 + alpha*u + 2*beta");
    opts.b = parse_presentation(pres);
    Verifier v(opts);
    auto certs = v.verify_stages();
    REQUIRE_FALSE(find_cert(certs, "normal_bundle").match);
    REQUIRE_FALSE(find_cert(certs, "normal_bundle").diff.empty());
}

TEST_CASE("negative control: perturbed reduced preimage display") {
    VerifyOptions opts;
    std::string text = opts.claims.ch8van;
    auto pos = text.find("9*beta^2*eta");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 1, "8");
    opts.claims.ch8van = text;
    Verifier v(opts);
    auto certs = v.verify_c8();
    const Certificate& c = find_cert(certs, "ch8van_nf");
    REQUIRE_FALSE(c.match);
    REQUIRE(c.diff.size() == 1);
    REQUIRE_FALSE(find_cert(certs, "c8_vanishing").match);
}

TEST_CASE("reports are deterministic and both renderings carry the data") {
    Verifier v1, v2;
    Report r1{.command = "verify all", .certificates = v1.verify_all()};
    Report r2{.command = "verify all", .certificates = v2.verify_all()};
    REQUIRE(to_json(r1, false).dump() == to_json(r2, false).dump());

    std::string text = to_text(r1);
    nlohmann::json j = to_json(r1);
    REQUIRE(j["summary"]["failed"] == 0);
    for (const auto& stage : j["stages"]) {
        REQUIRE(text.find(stage["name"].get<std::string>()) != std::string::npos);
        REQUIRE(stage["match"].get<bool>());
    }
    REQUIRE(j["stages"].size() == r1.certificates.size());
}
