#include <doctest.h>

#include <fstream>

#include "regpow/cache.hpp"

using namespace regpow;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("regpow_cache_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("sha256 of known strings") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("put then get returns identical bytes") {
    ResultCache cache(fresh_dir("roundtrip"), "1.0.0", 0.0);
    const auto key = cache.make_key("ring(3) ideal(x1*x2)", "regularity", json::object());
    CHECK(key.size() == 64);
    CHECK_FALSE(cache.get(key));
    const json value = {{"module_reg", 2}, {"sheaf_reg", 2}};
    cache.put(key, value);
    const auto got = cache.get(key);
    REQUIRE(got);
    CHECK(got->dump() == value.dump());
    CHECK(cache.stats().hits == 1);
    CHECK(cache.stats().misses == 1);
    CHECK(fs::exists(cache.entry_path(key)));
  }

  TEST_CASE("keys separate operations, parameters and versions") {
    const auto dir = fresh_dir("keys");
    ResultCache a(dir, "1.0.0", 0.0);
    ResultCache b(dir, "1.0.1", 0.0);
    const auto k = a.make_key("ring(2) ideal(x1)", "regularity", json::object());
    CHECK(k == a.make_key("ring(2) ideal(x1)", "regularity", json::object()));
    CHECK(k != a.make_key("ring(2) ideal(x1)", "betti", json::object()));
    CHECK(k != a.make_key("ring(3) ideal(x1)", "regularity", json::object()));
    CHECK(k != a.make_key("ring(2) ideal(x1)", "regularity", {{"p", 2}}));
    a.put(k, json{{"v", 1}});
    // a version bump misses even though the old entry is on disk
    CHECK_FALSE(b.get(b.make_key("ring(2) ideal(x1)", "regularity", json::object())));
  }

  TEST_CASE("corrupt entries are discarded and recomputed") {
    ResultCache cache(fresh_dir("corrupt"), "1.0.0", 0.0);
    const auto key = cache.make_key("ring(2) ideal(x1^2, x2^3)", "regularity", json::object());
    cache.put(key, json{{"module_reg", 4}});
    {
      std::ofstream out(cache.entry_path(key), std::ios::binary | std::ios::trunc);
      out << R"({"key":")" << key << R"(","engine":"1.0.0","checksum":"00","value":{"module_reg":5}})";
    }
    int computed = 0;
    const json v = cache.get_or_compute(key, [&] {
      ++computed;
      return json{{"module_reg", 4}};
    });
    CHECK(computed == 1);
    CHECK(v["module_reg"] == 4);
    CHECK(cache.stats().corrupt == 1);
    CHECK(cache.warnings().size() == 1);
    // truncated file
    {
      std::ofstream out(cache.entry_path(key), std::ios::binary | std::ios::trunc);
      out << R"({"key":)";
    }
    CHECK_FALSE(cache.get(key));
    CHECK(cache.stats().corrupt == 2);
  }

  TEST_CASE("audits recompute hits and repair mismatches") {
    ResultCache cache(fresh_dir("audit"), "1.0.0", 1.0, 42);
    const auto key = cache.make_key("ring(1) ideal(x1)", "regularity", json::object());
    cache.put(key, json{{"v", 1}});
    int computed = 0;
    const json same = cache.get_or_compute(key, [&] {
      ++computed;
      return json{{"v", 1}};
    });
    CHECK(computed == 1);
    CHECK(same["v"] == 1);
    CHECK(cache.stats().audits == 1);
    CHECK(cache.stats().audit_mismatches == 0);
    const json fixed = cache.get_or_compute(key, [] { return json{{"v", 2}}; });
    CHECK(fixed["v"] == 2);
    CHECK(cache.stats().audit_mismatches == 1);
    CHECK((*cache.get(key))["v"] == 2);
  }

  TEST_CASE("no temporary files are left behind") {
    ResultCache cache(fresh_dir("tmp"), "1.0.0", 0.0);
    for (int i = 0; i < 20; ++i) cache.put(cache.make_key("x", "op", {{"i", i}}), json{{"i", i}});
    std::size_t files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(cache.directory())) {
      if (!entry.is_regular_file()) continue;
      ++files;
      CHECK(entry.path().extension() == ".json");
    }
    CHECK(files == 20);
  }
}
