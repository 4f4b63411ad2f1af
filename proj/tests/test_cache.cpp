#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiczeta/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cubiczeta;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/cubiczeta_test_" + name) {}
    ~TempFile() {
        std::remove(path.c_str());
        std::remove(manifest_path(path).c_str());
    }
};

} // namespace

TEST_CASE("record lines round-trip") {
    OrbitRecord rec;
    rec.rep = {0, 1, 1, 0};
    rec.disc = 1;
    rec.stab = 3;
    rec.membership = 0b0000010011;
    std::string line = record_line(rec);
    CHECK(line == "1,3,0,1,1,0,19");
    CHECK(parse_record_line(line) == rec);
    CHECK_THROWS_AS(parse_record_line("not,a,line"), std::runtime_error);
}

TEST_CASE("cache write, read and validation") {
    TempFile tmp("roundtrip.csv");
    auto records = enumerate_orbits(80);
    write_cache(tmp.path, records, 80);

    auto load = read_cache(tmp.path);
    CHECK(load.manifest.cutoff == 80);
    CHECK(load.manifest.count == static_cast<long long>(records.size()));
    CHECK(load.manifest.sign_filter == "both");
    REQUIRE(load.records.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) CHECK(load.records[i] == records[i]);

    // Header present and first on the file.
    std::ifstream in(tmp.path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "cubiczeta-orbits v1 cutoff=80");
}

TEST_CASE("corruption is detected by the checksum") {
    TempFile tmp("corrupt.csv");
    auto records = enumerate_orbits(60);
    write_cache(tmp.path, records, 60);

    // Flip one digit in a record line.
    std::ifstream in(tmp.path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("\n1,3,");
    REQUIRE(pos != std::string::npos);
    text[pos + 3] = '1';
    std::ofstream out(tmp.path, std::ios::trunc);
    out << text;
    out.close();

    CHECK_THROWS_WITH_AS(read_cache(tmp.path), doctest::Contains("checksum"),
                         std::runtime_error);
}

TEST_CASE("extension preserves the verified range") {
    TempFile tmp("extend.csv");
    auto small = enumerate_orbits(100);
    write_cache(tmp.path, small, 100);

    auto extra = enumerate_orbits_range(100, 200);
    auto manifest = extend_cache(tmp.path, extra, 200);
    CHECK(manifest.cutoff == 200);
    CHECK(manifest.count == static_cast<long long>(small.size() + extra.size()));

    auto load = read_cache(tmp.path);
    auto whole = enumerate_orbits(200);
    REQUIRE(load.records.size() == whole.size());
    for (size_t i = 0; i < whole.size(); ++i) CHECK(load.records[i] == whole[i]);

    // Records inside the verified range are refused.
    CHECK_THROWS_AS(extend_cache(tmp.path, small, 300), std::runtime_error);
}
