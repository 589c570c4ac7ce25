#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "arthur/cli/commands.hpp"
#include "arthur/cli/workspace.hpp"
#include "json.hpp"

namespace arthur::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kData{ARTHUR_TEST_DATA_DIR};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes `text` to a scratch file that lives as long as the object.
class TempWorkspace {
 public:
  explicit TempWorkspace(const std::string& text) {
    path_ = fs::temp_directory_path() /
            ("arthur-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempWorkspace() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string sp() { return (kData / "sp_transfer.json").string(); }

TEST(Cli, Validate) {
  const auto r = call({"-w", sp(), "validate"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("violations"));
}

TEST(Cli, PacketCount) {
  const auto r = call({"-w", sp(), "packet", "--param", "P", "--count"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["count"], 6);
  const auto listed = call({"-w", sp(), "packet", "--param", "P", "--list"});
  EXPECT_EQ(json::parse(listed.out)["params"].size(), 6u);
}

TEST(Cli, Transfer) {
  const auto r = call({"-w", sp(), "transfer", "--param", "P", "--rho", "one", "--a0", "3", "--b0", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["checks"]["sign_identity"], true);
  EXPECT_EQ(j["pi_plus_nonnull"], "unknown");
  EXPECT_EQ(j["psi_plus"]["m_star"], 19);
}

TEST(Cli, Jac) {
  const auto r = call({"jac", "--normal-form", "--x2", "5", "1", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["normal_form_x2"], json::array({1, 5, 7}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"-w", sp(), "packet"}).code, kExitUsage);
  EXPECT_EQ(call({"-w", sp(), "order", "--param", "P", "--rho", "one", "--a0", "3", "--b0", "1"}).code,
            kExitUsage);
}

TEST(Cli, MissingNamesAreValidationErrors) {
  const auto r = call({"-w", sp(), "packet", "--param", "nope"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_TRUE(json::parse(r.out).contains("error"));
}

TEST(Cli, SchemaErrorsCarryPointers) {
  json doc = json::parse(slurp(kData / "sp_transfer.json"));
  doc["parameters"][0]["jord"][0]["b"] = "three";
  try {
    parse_workspace(doc.dump());
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/parameters/0/jord/0/b");
  }
  TempWorkspace tmp(doc.dump());
  const auto r = call({"-w", tmp.path(), "validate"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_EQ(json::parse(r.out)["pointer"], "/parameters/0/jord/0/b");
}

TEST(Cli, DanglingLabel) {
  json doc = json::parse(slurp(kData / "sp_transfer.json"));
  doc["global"][0]["pairs"][1]["rho"] = "ghost";
  try {
    parse_workspace(doc.dump());
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/global/0/pairs/1/rho");
  }
}

TEST(Cli, UnknownKeyRejected) {
  json doc = json::parse(slurp(kData / "sp_transfer.json"));
  doc["group"]["colour"] = "blue";
  EXPECT_THROW(parse_workspace(doc.dump()), SchemaError);
  EXPECT_THROW(parse_workspace("{not json"), SchemaError);
}

TEST(Cli, CorpusRoundTrips) {
  int files = 0;
  for (const auto& entry : fs::directory_iterator(kData)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const std::string text = slurp(entry.path());
    const std::string once = serialize_workspace(parse_workspace(text));
    EXPECT_EQ(once, text) << entry.path();
    EXPECT_EQ(serialize_workspace(parse_workspace(once)), once) << entry.path();
  }
  EXPECT_GE(files, 3);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"-w", sp(), "packet", "--param", "P", "--list", "--epsilon", "-"};
  const auto a = call(args);
  const auto b = call(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace arthur::cli
