#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rabi/scenario.hpp"

using namespace rabi::scenario;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json tiny_config(const std::string& out_dir) {
    return json{{"name", "tiny"},
                {"output_dir", out_dir},
                {"runs",
                 json::array({json{{"label", "rwa"},
                                   {"model", "srm_rwa"},
                                   {"params", {{"t_pi", 50.0}}},
                                   {"horizon", 200.0}}})}};
}

}  // namespace

TEST_CASE("every bundled preset parses and validates") {
    const auto names = preset_names();
    REQUIRE(names.size() == 10);
    for (const auto& n : names) {
        INFO("preset " << n);
        const Scenario sc = parse_scenario(preset_config(n));
        CHECK(sc.name == n);
        CHECK_FALSE(sc.description.empty());
    }
}

TEST_CASE("desk presets document their amplitude substitution") {
    for (const auto& n : preset_names()) {
        if (n.find("desk") == std::string::npos) continue;
        const auto cfg = preset_config(n);
        const auto desc = cfg["description"].get<std::string>();
        INFO("preset " << n);
        CHECK(desc.find("Desk scale") != std::string::npos);
        // fig2a-desk keeps the true amplitude and shortens the horizon
        if (n != "fig2a-desk")
            CHECK(desc.find("alpha^2 reduced") != std::string::npos);
    }
}

TEST_CASE("config errors name the offending field") {
    json cfg = tiny_config(".");
    SECTION("missing horizon") {
        cfg["runs"][0].erase("horizon");
        try {
            parse_scenario(cfg);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("horizon") != std::string::npos);
        }
    }
    SECTION("missing coupling parameters") {
        cfg["runs"][0]["params"] = json::object();
        try {
            parse_scenario(cfg);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("alpha_sq") != std::string::npos);
            CHECK(msg.find("t_pi") != std::string::npos);
        }
    }
    SECTION("unknown model") {
        cfg["runs"][0]["model"] = "qrm_superduper";
        CHECK_THROWS_AS(parse_scenario(cfg), ConfigError);
    }
    SECTION("sampling density floor") {
        cfg["runs"][0]["samples_per_pi_pulse"] = 2;
        CHECK_THROWS_AS(parse_scenario(cfg), ConfigError);
    }
}

TEST_CASE("sample grid includes endpoints and snapshots") {
    Scenario sc = parse_scenario(tiny_config("."));
    Run r = sc.runs[0];
    r.snapshot_times = {33.3};
    const auto g = sample_grid(r);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 200.0);
    CHECK(std::count(g.begin(), g.end(), 33.3) == 1);
    CHECK(std::is_sorted(g.begin(), g.end()));
    // 16 samples per T_pi = 50
    CHECK(g.size() >= 16 * 4);
}

TEST_CASE("identical configs produce bit-identical outputs") {
    const fs::path base = fs::temp_directory_path() / "rabi_scenario_test";
    fs::remove_all(base);
    const auto d1 = (base / "a").string(), d2 = (base / "b").string();
    run_scenario(parse_scenario(tiny_config(d1)));
    run_scenario(parse_scenario(tiny_config(d2)));
    CHECK(slurp(d1 + "/tiny_rwa.tsv") == slurp(d2 + "/tiny_rwa.tsv"));
    fs::remove_all(base);
}

TEST_CASE("manifest records stats, tolerances and hashes") {
    const fs::path base = fs::temp_directory_path() / "rabi_manifest_test";
    fs::remove_all(base);
    json cfg = tiny_config(base.string());
    cfg["runs"].push_back(json{{"label", "exact"},
                               {"model", "srm_exact"},
                               {"params", {{"t_pi", 50.0}}},
                               {"horizon", 200.0}});
    const std::string mpath = run_scenario(parse_scenario(cfg));
    const json m = json::parse(slurp(mpath));
    REQUIRE(m["runs"].size() == 2);
    CHECK(m["runs"][1]["stats"]["accepted_steps"].get<long>() >= 1);
    CHECK(m["runs"][1]["rtol"].get<double>() == 1e-10);
    const auto hash =
        m["runs"][0]["files"][0]["fnv1a"].get<std::string>();
    CHECK(hash.size() == 16);
    fs::remove_all(base);
}

TEST_CASE("qrm run emits the full observable column set and snapshots") {
    const fs::path base = fs::temp_directory_path() / "rabi_qrm_scenario";
    fs::remove_all(base);
    json cfg = json{{"name", "mini"},
                    {"output_dir", base.string()},
                    {"runs",
                     json::array({json{{"label", "q"},
                                       {"model", "qrm"},
                                       {"params", {{"alpha_sq", 20.0}}},
                                       {"horizon", 100.0},
                                       {"snapshot_times", {50.0}},
                                       {"rtol", 1e-8},
                                       {"atol", 1e-10}}})}};
    run_scenario(parse_scenario(cfg));
    const std::string series = slurp((base / "mini_q.tsv").string());
    CHECK(series.find("p_alpha_survival") != std::string::npos);
    CHECK(series.find("s_f_linear") != std::string::npos);
    const std::string snap = slurp((base / "mini_q_snapshot_50.tsv").string());
    CHECK(snap.find("delta_p_n") != std::string::npos);
    fs::remove_all(base);
}
