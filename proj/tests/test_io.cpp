#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include "xxz/errors.hpp"
#include "xxz/io.hpp"
#include "xxz/parallel.hpp"

using namespace xxz;
namespace fs = std::filesystem;

namespace {
fs::path scratch_dir(const char* tag) {
  const fs::path p = fs::temp_directory_path() / (std::string("xxzql_test_") + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("number formatting") {
    CHECK(format_real(0.586503328433656) == "0.586503328433656");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1e-20) == "1e-20");
    CHECK(format_real(0.1 + 0.2) == "0.3");
  }

  TEST_CASE("csv rendering") {
    CsvTable t({"a", "b,c"});
    t.add_row({"1", "x\"y"});
    const std::string s = t.render("demo", "{}");
    CHECK(s == "# schema_version: 1\n# kind: demo\n# config: {}\na,\"b,c\"\n1,\"x\"\"y\"\n");
    CHECK_THROWS_AS(t.add_row({"1"}), InvalidArgument);
    CHECK(CsvTable::complex_columns("K") == std::vector<std::string>{"K_re", "K_im"});
  }

  TEST_CASE("transfer artifact round trip") {
    const fs::path dir = scratch_dir("artifact");
    const auto t = build_transfer(TransferKind::VTwisted, Anisotropy(2, 5), cplx(1.3, 0.2), cplx(0.1, -0.4), 0.6, 4);
    const fs::path p = dir / "v.xop";
    write_transfer_artifact(p, t);
    const auto back = read_transfer_artifact(p);
    CHECK(back.kind == t.kind);
    CHECK(back.params == t.params);
    CHECK(back.phi == t.phi);
    CHECK(back.s == t.s);
    CHECK(back.flux == t.flux);
    CHECK(back.op.matrix() == t.op.matrix());
    CHECK(fs::file_size(p) > 16u * 256u);

    // header layout: magic then little-endian length
    std::ifstream is(p, std::ios::binary);
    char magic[8];
    is.read(magic, 8);
    CHECK(std::string(magic, 8) == "XXZQLOP1");
    fs::remove_all(dir);
  }

  TEST_CASE("malformed artifacts are rejected") {
    const fs::path dir = scratch_dir("bad");
    {
      std::ofstream os(dir / "junk.xop", std::ios::binary);
      os << "not an artifact";
    }
    CHECK_THROWS_AS(read_transfer_artifact(dir / "junk.xop"), InvalidArgument);
    CHECK_THROWS_AS(read_transfer_artifact(dir / "missing.xop"), InvalidArgument);
    // truncated payload
    write_transfer_artifact(dir / "ok.xop", build_transfer(TransferKind::Y, Anisotropy(1, 3), 1.5, 0.0, 0.0, 3));
    fs::resize_file(dir / "ok.xop", fs::file_size(dir / "ok.xop") - 8);
    CHECK_THROWS_AS(read_transfer_artifact(dir / "ok.xop"), InvalidArgument);
    fs::remove_all(dir);
  }

  TEST_CASE("cache hit returns the stored operator") {
    const fs::path dir = scratch_dir("cache");
    const Anisotropy a(1, 3);
    const auto first = cached_transfer(dir, TransferKind::Y, a, cplx(1.5, 0.1), 0.0, 0.0, 4);
    const fs::path p = dir / artifact_file_name(TransferKind::Y, a, cplx(1.5, 0.1), 0.0, 0.0, 4);
    CHECK(fs::exists(p));
    const auto second = cached_transfer(dir, TransferKind::Y, a, cplx(1.5, 0.1), 0.0, 0.0, 4);
    CHECK(second.op.matrix() == first.op.matrix());
    CHECK(artifact_file_name(TransferKind::Y, a, 1.5, 0.0, 0.0, 4) !=
          artifact_file_name(TransferKind::Y, a, std::nextafter(1.5, 2.0), 0.0, 0.0, 4));
    fs::remove_all(dir);
  }
}

TEST_SUITE("parallel") {
  TEST_CASE("every index runs once, nested calls included") {
    std::vector<std::atomic<int>> hits(200);
    parallel_for(20, [&](std::size_t i) {
      parallel_for(10, [&](std::size_t j) { hits[i * 10 + j]++; });
    });
    for (auto& h : hits) CHECK(h.load() == 1);
  }

  TEST_CASE("exceptions propagate") {
    CHECK_THROWS_AS(parallel_for(8, [](std::size_t i) {
                      if (i == 5) throw InvalidArgument("boom");
                    }),
                    InvalidArgument);
  }
}
