#include <doctest.h>

#include "mzvq/output.hpp"

using namespace mzvq;

TEST_SUITE("output") {

TEST_CASE("rational record schema and byte-exact round trip") {
    const PiRational q(BigRational(1, 90), 4);
    const std::string bytes = rational_record(q).dump();
    CHECK(bytes == R"({"kind":"rational","num":"1","den":"90","pi_power":4})");
    // parse and re-serialize: identical bytes
    const OrderedJson parsed = OrderedJson::parse(bytes);
    CHECK(parsed.dump() == bytes);
    // reconstruct the rational losslessly
    const PiRational back(BigRational(BigInt(parsed["num"].get<std::string>()),
                                      BigInt(parsed["den"].get<std::string>())),
                          parsed["pi_power"].get<int>());
    CHECK(back == q);
}

TEST_CASE("rational record with a large exact value") {
    const PiRational q(BigRational(181, BigInt("205810680135060000")), 20);
    const OrderedJson j = rational_record(q);
    CHECK(j["num"] == "181");
    CHECK(j["den"] == "205810680135060000");
    const OrderedJson reparsed = OrderedJson::parse(j.dump());
    CHECK(reparsed.dump() == j.dump());
}

TEST_CASE("value record carries value and error strings") {
    const ApproxReal v{Real("0.125"), Real("1e-13")};
    const OrderedJson j = value_record(v);
    CHECK(j["kind"] == "value");
    CHECK(j["value"].get<std::string>().substr(0, 5) == "0.125");
    CHECK(j["abs_err"].get<std::string>().find("e-13") != std::string::npos);
}

TEST_CASE("report record") {
    VerificationReport r;
    r.name = "euler-product";
    r.instance = "n=4";
    r.mode = "exact";
    r.passed = true;
    r.residual = "0";
    const OrderedJson j = report_record(r);
    CHECK(j.dump() ==
          R"({"kind":"report","name":"euler-product","instance":"n=4","mode":"exact","passed":true,"residual":"0"})");
}

TEST_CASE("csv table is well formed") {
    const BivariateSeries t = q_rational_table(2, 2);
    const std::string csv = table_csv(t);
    CHECK(csv == "n,d=1,d=2\n1,1/90,0/1\n2,1/9450,1/113400\n");
}

TEST_CASE("deterministic output") {
    const BivariateSeries t = q_rational_table(3, 3);
    CHECK(table_csv(t) == table_csv(t));
    CHECK(table_record(t).dump() == table_record(t).dump());
}

}  // TEST_SUITE
