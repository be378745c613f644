// Drives the installed command-line tool end to end. The binary path comes in
// through the VLCB_TOOL_PATH compile definition so the tests track the build.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_tool(const std::string& args) {
    const std::string command = std::string(VLCB_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path fresh_dir(const char* name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const std::string kSmallConfig =
    "front_ends = 4\n"
    "ml = 16\n"
    "cl = 32\n"
    "rll = manchester\n"
    "sys_hz = 50000000\n"
    "sr_hz = 100000\n"
    "latency = 14\n"
    "fifo_depth = 16\n"
    "frozen = bec:0.5\n";

const std::string kSmallSchedule =
    "cycle,address,payload_hex\n"
    "0,0,0000000000000000000000000000beef\n"
    "0,1,0000000000000000000000000000cafe\n"
    "5,2,00000000000000000000000000001234\n";

}  // namespace

TEST_CASE("encode and decode round trip through the command line") {
    const auto encoded =
        run_tool("encode --ml 16 --cl 32 --rll manchester --message-hex beef");
    REQUIRE(encoded.exit_code == 0);
    const std::string frame = first_line(encoded.output);
    CHECK(frame.size() == 64);

    const auto decoded =
        run_tool("decode --ml 16 --cl 32 --rll manchester --frame-bits " + frame);
    REQUIRE(decoded.exit_code == 0);
    CHECK(first_line(decoded.output) == "beef");

    const auto decoded_4b6b = run_tool(
        "decode --ml 16 --cl 32 --rll 4b6b --frame-bits " +
        first_line(run_tool("encode --ml 16 --cl 32 --rll 4b6b --message-hex cafe").output));
    CHECK(first_line(decoded_4b6b.output) == "cafe");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_tool("encode --ml 16 --cl 33 --message-hex beef").exit_code == 2);
    CHECK(run_tool("encode --ml 16 --cl 32").exit_code == 2);  // no message given
    CHECK(run_tool("encode --ml 16 --cl 32 --message-hex aa --message-bits 1").exit_code == 2);
    CHECK(run_tool("encode --ml 16 --cl 32 --rll biphase --message-hex beef").exit_code == 2);
    CHECK(run_tool("bench --k 0").exit_code == 2);
    CHECK(run_tool("footprint --ml 20 --cl 40").exit_code == 2);
    CHECK(run_tool("no-such-command").exit_code == 2);
}

TEST_CASE("line code violations exit with 3") {
    // A 1,1 sample pair never appears in a legal manchester frame.
    std::string frame = "11";
    for (int i = 0; i < 31; ++i) frame += "10";
    const auto result = run_tool("decode --ml 16 --cl 32 --rll manchester --frame-bits " + frame);
    CHECK(result.exit_code == 3);
}

TEST_CASE("frozen prints the designed set in ascending order") {
    const auto result = run_tool("frozen --ml 4 --cl 8 --erasure 0.5");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output == "0\n1\n2\n4\n");
}

TEST_CASE("simulate runs a schedule and verifies every anchor") {
    const auto dir = fresh_dir("vlcb_cli_sim");
    write_text(dir / "net.cfg", kSmallConfig);
    write_text(dir / "sched.csv", kSmallSchedule);

    const std::string base = "simulate --config " + (dir / "net.cfg").string() +
                             " --schedule " + (dir / "sched.csv").string() + " --cycles 70000";
    const auto result = run_tool(base + " --out-dir " + (dir / "out").string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("verify: ok=3 idle=1 no_frame=0 mismatch=0") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "fe_0.bits"));
    CHECK(fs::exists(dir / "out" / "events.csv"));
    CHECK(fs::exists(dir / "out" / "verify.csv"));

    // Same config and schedule again: every emitted byte must match.
    const auto rerun = run_tool(base + " --out-dir " + (dir / "out2").string());
    REQUIRE(rerun.exit_code == 0);
    for (const char* name : {"fe_0.bits", "fe_1.bits", "fe_2.bits", "fe_3.bits", "events.csv",
                             "verify.csv"})
        CHECK(read_file(dir / "out" / name) == read_file(dir / "out2" / name));

    fs::remove_all(dir);
}

TEST_CASE("schedules pointing past the last anchor exit with 4") {
    const auto dir = fresh_dir("vlcb_cli_addr");
    write_text(dir / "net.cfg", kSmallConfig);
    write_text(dir / "sched.csv",
               "cycle,address,payload_hex\n0,9,0000000000000000000000000000beef\n");
    const auto result = run_tool("simulate --config " + (dir / "net.cfg").string() +
                                 " --schedule " + (dir / "sched.csv").string() + " --out-dir " +
                                 (dir / "out").string());
    CHECK(result.exit_code == 4);
    fs::remove_all(dir);
}

TEST_CASE("malformed configs exit with 2 and name the offending line") {
    const auto dir = fresh_dir("vlcb_cli_badcfg");
    write_text(dir / "net.cfg", "front_ends = 4\nspeed = warp9\n");
    write_text(dir / "sched.csv", "cycle,address,payload_hex\n");
    const auto result = run_tool("simulate --config " + (dir / "net.cfg").string() +
                                 " --schedule " + (dir / "sched.csv").string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("net.cfg:2") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bench prints reference gains without asserting them") {
    const auto dir = fresh_dir("vlcb_cli_bench");
    const auto result = run_tool("bench --k 1,2,4 --ml 16 --front-ends 8 --mode modeled "
                                 "--out-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("ref_arduino") != std::string::npos);
    CHECK(result.output.find("2729") != std::string::npos);  // the k=1 reference row
    CHECK(result.output.find("not asserted") != std::string::npos);
    CHECK(fs::exists(dir / "delays_modeled.csv"));
    CHECK(fs::exists(dir / "gains.csv"));
    CHECK(fs::exists(dir / "manifest.txt"));
    fs::remove_all(dir);
}

TEST_CASE("footprint reports the array budget as csv") {
    const auto result = run_tool("footprint --ml 128 --rll 4b6b");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("ml,cl,scheme,array_bytes,overhead,total") != std::string::npos);
    CHECK(result.output.find("128,256,4b6b,1024,0,1024") != std::string::npos);

    const auto all = run_tool("footprint --all");
    CHECK(all.exit_code == 0);
    // 4 supported pairs x 2 schemes
    int rows = 0;
    for (char c : all.output)
        if (c == '\n') ++rows;
    CHECK(rows == 9);  // header + 8 rows
}
