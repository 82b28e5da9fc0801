/**
 * @file test_cache.cpp
 * @brief Result cache: round trip, corruption handling, version invalidation.
 */
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"

#include "cuspquot/cache.hpp"

using namespace cuspquot;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("cuspquot-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("values survive a reopen") {
    TempDir dir;
    {
        ResultCache c(dir.path);
        CHECK(c.size() == 0);
        c.put("nilpairs", "n=3,p=2", 232);
        c.put("big", "x", ipow(BigInt(10), 40));
        CHECK(c.get("nilpairs", "n=3,p=2") == BigInt(232));
    }
    CHECK(slurp(dir.path / kCacheFileName) == "cuspquot-cache v1\nnilpairs;n=3,p=2;232\nbig;x;1" + std::string(40, '0') + "\n");
    ResultCache c(dir.path);
    CHECK(c.warnings().empty());
    CHECK(c.size() == 2);
    CHECK(c.get("nilpairs", "n=3,p=2") == BigInt(232));
    CHECK(c.get("big", "x") == ipow(BigInt(10), 40));
    CHECK(!c.get("nilpairs", "n=3,p=3"));
    CHECK_THROWS_AS(c.put("a;b", "x", 1), std::invalid_argument);
    CHECK_THROWS_AS(c.put("a", "x\ny", 1), std::invalid_argument);
}

TEST_CASE("corrupted lines are skipped with a warning") {
    TempDir dir;
    {
        std::ofstream out(dir.path / kCacheFileName);
        out << "cuspquot-cache v1\nquot;d=1,n=1,p=2;3\ngarbage\nquot;d=1,n=2,p=2;1x\nquot;d=1,n=3,p=2;-5\n";
    }
    ResultCache c(dir.path);
    REQUIRE(c.warnings().size() == 2);
    CHECK(c.warnings()[0].find("rejected corrupted line 3") != std::string::npos);
    CHECK(c.warnings()[1].find("rejected corrupted line 4") != std::string::npos);
    CHECK(c.get("quot", "d=1,n=1,p=2") == BigInt(3));
    CHECK(c.get("quot", "d=1,n=3,p=2") == BigInt(-5));
    CHECK(!c.get("quot", "d=1,n=2,p=2"));
}

TEST_CASE("a version change discards the file") {
    TempDir dir;
    {
        ResultCache c(dir.path, "1");
        c.put("k", "p", 7);
    }
    ResultCache c2(dir.path, "2");
    REQUIRE(c2.warnings().size() == 1);
    CHECK(c2.warnings()[0].find("version header mismatch") != std::string::npos);
    CHECK(c2.size() == 0);
    CHECK(slurp(dir.path / kCacheFileName) == "cuspquot-cache v2\n");
}

TEST_CASE("memoize computes once") {
    TempDir dir;
    ResultCache c(dir.path);
    int calls = 0;
    auto f = [&] {
        ++calls;
        return BigInt(42);
    };
    CHECK(c.memoize("k", "p", f) == 42);
    CHECK(c.memoize("k", "p", f) == 42);
    CHECK(calls == 1);
    ResultCache again(dir.path);
    CHECK(again.memoize("k", "p", f) == 42);
    CHECK(calls == 1);
}
