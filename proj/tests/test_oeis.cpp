#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "errsum/oeis_bridge.hpp"

using namespace errsum;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("b-file parsing") {
    BFile bf = parse_bfile("0 1\n1 2\n2 5");
    REQUIRE(bf.entries.size() == 3);
    CHECK(bf.entries[0] == std::make_pair(0L, Int(1)));
    CHECK(bf.entries[2] == std::make_pair(2L, Int(5)));

    BFile bc = parse_bfile("# comment\n1 3\n\n  # more\n2 -4");
    REQUIRE(bc.entries.size() == 2);
    CHECK(bc.entries[1].second == -4);

    CHECK_THROWS_WITH(parse_bfile("1 3\n1 4"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_bfile("0 1\nbogus"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_AS(parse_bfile("0 1 2"), std::runtime_error);

    // parse -> serialize -> parse identity
    BFile rt = parse_bfile(serialize_bfile(bf));
    CHECK(rt.entries == bf.entries);
}

TEST_CASE("registered bindings match fixture b-files") {
    auto bindings = registered_bindings();
    for (const char* id : {"A001850", "A003417", "A005258", "A005259", "A108626"}) {
        const SequenceBinding& bd = find_binding(bindings, id);
        CHECK(bd.enabled);
        std::string path = std::string(DATA_DIR) + "/b" + std::string(id).substr(1) + ".txt";
        BFile bf = parse_bfile(slurp(path), path);
        OeisReport rep = compare(bd, bf, 18);
        INFO(id);
        CHECK(rep.ok);
        CHECK(rep.matched >= 18);
        CHECK(rep.offset_used == 0);
        CHECK(rep.first_mismatch == -1);
    }
    const SequenceBinding& lcm_bd = find_binding(bindings, "A051451");
    CHECK_FALSE(lcm_bd.enabled);  // unconfirmed binding stays off by default
    auto vals = lcm_bd.generator(6);
    CHECK(vals == std::vector<Int>{1, 2, 6, 12, 60, 420});
    CHECK_THROWS_AS(find_binding(bindings, "A000000"), std::invalid_argument);
}

TEST_CASE("offset auto-alignment and mismatch reporting") {
    auto bindings = registered_bindings();
    const SequenceBinding& bd = find_binding(bindings, "A005259");
    // shift the fixture by one position (simulate an offset-1 b-file)
    std::string path = std::string(DATA_DIR) + "/b005259.txt";
    BFile bf = parse_bfile(slurp(path), path);
    BFile shifted;
    for (std::size_t i = 0; i + 1 < bf.entries.size(); ++i)
        shifted.entries.emplace_back(static_cast<long>(i), bf.entries[i + 1].second);
    OeisReport rep = compare(bd, shifted, 12);
    CHECK(rep.ok);
    CHECK(rep.offset_used == -1);

    BFile wrong = bf;
    wrong.entries[4].second += 1;
    OeisReport bad = compare(bd, wrong, 12);
    CHECK_FALSE(bad.ok);
    CHECK(bad.matched == 4);
    CHECK(bad.first_mismatch == 4);

    BFile junk;
    for (long i = 0; i < 10; ++i) junk.entries.emplace_back(i, Int(7));
    CHECK_THROWS_AS(compare(bd, junk, 10), std::runtime_error);
}
