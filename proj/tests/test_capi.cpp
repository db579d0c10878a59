#include <doctest.h>

#include <nlohmann/json.hpp>

#include "flagdescent/capi.h"
#include "flagdescent/report.hpp"
#include "helpers.hpp"

using nlohmann::json;

namespace {

struct Owned {
    char* p = nullptr;
    ~Owned() { fd_free_string(p); }
};

json run_json(fd_status st, const Owned& out) {
    REQUIRE(st == FD_OK);
    REQUIRE(out.p != nullptr);
    return json::parse(out.p);
}

} // namespace

TEST_CASE("form handle lifecycle and errors") {
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("u:2,1", &form) == FD_OK);
    CHECK(std::string(fd_form_name(form)) == "u:2,1");
    CHECK(fd_form_rank(form) == 3);
    fd_form_free(form);

    form = nullptr;
    CHECK(fd_form_parse("martians:3", &form) == FD_ERR_PARSE);
    CHECK(form == nullptr);
    CHECK(std::string(fd_last_error()).find("martians") != std::string::npos);
    CHECK(fd_form_parse("u:1,2", &form) == FD_ERR_PARSE);
    CHECK(fd_form_parse(nullptr, &form) == FD_ERR_PARSE);
}

TEST_CASE("classify over the C surface") {
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("sp:2", &form) == FD_OK);
    Owned out;
    json r = run_json(fd_classify(form, nullptr, -1, 1, &out.p), out);
    CHECK(r["dynkin"]["z12_components"] == 2);
    CHECK(r["dynkin"]["z12i_components"] == 0);
    CHECK(r["types"].size() == 4);

    // single subset: indices {0} must be stable for sp:2
    Owned single;
    int idx[] = {0};
    json r1 = run_json(fd_classify(form, idx, 1, 0, &single.p), single);
    CHECK(r1["types"].size() == 1);
    fd_form_free(form);
}

TEST_CASE("check and cocycle over the C surface") {
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("gq:+1", &form) == FD_OK);
    long lambda[] = {1, 0};
    Owned out;
    json r = run_json(fd_check(form, lambda, 2, nullptr, 0, &out.p), out);
    auto value = fd::scalar_from_json(r["verdict"]["wbar_w_value"]);
    CHECK(value == fd::GaussianRational(fd::Rational(-1, 3)));
    CHECK(r["verdict"]["cocycle_trivial"] == false);
    CHECK(r["verdict"]["admits_descent"] == false);

    Owned coc;
    json rc = run_json(fd_cocycle(form, lambda, 2, &coc.p), coc);
    CHECK(rc["trivial"] == false);
    CHECK(rc["extension"] == "Q(i)/Q");
    fd_form_free(form);
}

TEST_CASE("math preconditions surface as FD_ERR_MATH") {
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("u:2,1", &form) == FD_OK);
    long lambda[] = {1, 0, -1};
    int unstable[] = {0};
    Owned out;
    CHECK(fd_check(form, lambda, 3, unstable, 1, &out.p) == FD_ERR_MATH);
    long bad_rank[] = {1, 0};
    CHECK(fd_check(form, bad_rank, 2, nullptr, 0, &out.p) == FD_ERR_MATH);
    fd_form_free(form);
}

TEST_CASE("res-classify over the C surface") {
    json request = {
        {"gamma_table", {{0, 1}, {1, 0}}},
        {"base", {{"target", "sp"}, {"rank", 2}}},
        {"galois",
         {{{"target", {0, 1}}, {"sign", {1, 1}}}, {{"target", {0, 1}}, {"sign", {-1, -1}}}}},
        {"w", {{{"target", {0, 1}}, {"sign", {1, 1}}}, {{"target", {0, 1}}, {"sign", {-1, -1}}}}},
        // with galois = w = -1, the conjugation condition forces equal components
        {"lambda", {{2, -1}, {2, -1}}},
    };
    Owned out;
    json r = run_json(fd_res_classify(request.dump().c_str(), &out.p), out);
    CHECK(r["dynkin"]["components"] == 2);
    CHECK(r["dynkin"]["orbit_size"] == 2);
    CHECK(r["type_count"] == 4);
    CHECK(r["lambda"]["conjugation_ok"] == true);
    CHECK(r["lambda"]["beta_trivial"] == true);

    CHECK(fd_res_classify("{not json", &out.p) == FD_ERR_PARSE);
}

TEST_CASE("every report type round-trips through JSON") {
    auto roundtrip = [](const char* text) {
        json a = json::parse(text);
        json b = json::parse(a.dump());
        CHECK(a == b);
    };
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("so-star:6", &form) == FD_OK);
    {
        Owned out;
        REQUIRE(fd_classify(form, nullptr, -1, 1, &out.p) == FD_OK);
        roundtrip(out.p);
    }
    {
        long lambda[] = {1, -1, 0};
        Owned out;
        REQUIRE(fd_check(form, lambda, 3, nullptr, 0, &out.p) == FD_OK);
        roundtrip(out.p);
    }
    {
        Owned out;
        REQUIRE(fd_verify_w(form, &out.p) == FD_OK);
        roundtrip(out.p);
    }
    {
        long lambda[] = {1, -1, 0};
        Owned out;
        REQUIRE(fd_cocycle(form, lambda, 3, &out.p) == FD_OK);
        roundtrip(out.p);
    }
    {
        long lambda[] = {-1, 0, 0};
        Owned out;
        REQUIRE(fd_irr(form, lambda, 3, &out.p) == FD_OK);
        roundtrip(out.p);
    }
    fd_form_free(form);
}

TEST_CASE("text rendering works for every report") {
    fd_form* form = nullptr;
    REQUIRE(fd_form_parse("u-star:4", &form) == FD_OK);
    Owned out;
    REQUIRE(fd_classify(form, nullptr, -1, 1, &out.p) == FD_OK);
    Owned text;
    REQUIRE(fd_render_text(out.p, &text.p) == FD_OK);
    CHECK(std::string(text.p).find("Dynkin scheme") != std::string::npos);
    fd_form_free(form);
}

TEST_CASE("scalar JSON form matches the documented shape") {
    json j = fd::scalar_json(fd::GaussianRational(fd::Rational(3, 4), fd::Rational(-1, 2)));
    CHECK(j["re"] == json::array({3, 4}));
    CHECK(j["im"] == json::array({-1, 2}));
    CHECK(fd::scalar_from_json(j) == fd::GaussianRational(fd::Rational(3, 4), fd::Rational(-1, 2)));
}
