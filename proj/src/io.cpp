#include "polytrope/io.hpp"

#include "polytrope/util.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace polytrope {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

bool file_exists(const std::string& path) { return std::filesystem::exists(path); }

std::string file_hash(const std::string& path) { return hex64(fnv1a(read_file(path))); }

namespace {

std::string checkpoint_body(int n, EnumMode mode, WinnerRule winner, const BfsState& state) {
    nlohmann::json j{{"format", 1},
                     {"n", n},
                     {"mode", mode == EnumMode::Maximal ? "maximal" : "all"},
                     {"winner", winner == WinnerRule::Min ? "min" : "max"},
                     {"expanded", state.expanded},
                     {"wave", state.wave},
                     {"visited", state.visited},
                     {"frontier", state.frontier}};
    return j.dump();
}

} // namespace

void save_checkpoint(const std::string& path, int n, EnumMode mode, WinnerRule winner,
                     const BfsState& state) {
    const std::string body = checkpoint_body(n, mode, winner, state);
    nlohmann::json j = nlohmann::json::parse(body);
    j["integrity"] = hex64(fnv1a(body));
    write_file(path, j.dump());
}

BfsState load_checkpoint(const std::string& path, int n, EnumMode mode, WinnerRule winner) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw CorruptCheckpoint(std::string("unreadable checkpoint: ") + e.what());
    }
    BfsState state;
    try {
        state.expanded = j.at("expanded").get<long long>();
        state.wave = j.at("wave").get<int>();
        state.visited = j.at("visited").get<std::vector<std::string>>();
        state.frontier = j.at("frontier").get<std::vector<std::string>>();
        const std::string recorded = j.at("integrity").get<std::string>();
        nlohmann::json body = j;
        body.erase("integrity");
        // integrity covers the canonical body serialization
        const std::string canonical = checkpoint_body(
            body.at("n").get<int>(),
            body.at("mode").get<std::string>() == "maximal" ? EnumMode::Maximal : EnumMode::All,
            body.at("winner").get<std::string>() == "min" ? WinnerRule::Min : WinnerRule::Max, state);
        if (hex64(fnv1a(canonical)) != recorded)
            throw CorruptCheckpoint("checkpoint integrity hash mismatch: " + path);
        if (body.at("n").get<int>() != n ||
            (body.at("mode").get<std::string>() == "maximal") != (mode == EnumMode::Maximal) ||
            (body.at("winner").get<std::string>() == "min") != (winner == WinnerRule::Min))
            throw CorruptCheckpoint("checkpoint does not match the requested run: " + path);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptCheckpoint(std::string("malformed checkpoint: ") + e.what());
    }
    return state;
}

bool checkpoint_exists(const std::string& path) { return file_exists(path); }

std::string RunManifest::to_json() const {
    nlohmann::json j{{"tool_version", tool_version},
                     {"command", command},
                     {"n", n},
                     {"mode", mode},
                     {"flags", flags},
                     {"seed", seed},
                     {"started", started},
                     {"finished", finished},
                     {"output_hashes", output_hashes},
                     {"counts", counts},
                     {"completed", completed}};
    return j.dump(2);
}

RunManifest RunManifest::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.tool_version = j.value("tool_version", "");
    m.command = j.value("command", "");
    m.n = j.value("n", 0);
    m.mode = j.value("mode", "");
    m.flags = j.value("flags", std::map<std::string, std::string>{});
    m.seed = j.value("seed", std::uint64_t{0});
    m.started = j.value("started", "");
    m.finished = j.value("finished", "");
    m.output_hashes = j.value("output_hashes", std::map<std::string, std::string>{});
    m.counts = j.value("counts", std::map<std::string, long long>{});
    m.completed = j.value("completed", false);
    return m;
}

void write_records_file(const std::string& path, const std::vector<ConeRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_to_json(r);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<ConeRecord> read_records_file(const std::string& path) {
    std::vector<ConeRecord> records;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json(line));
    }
    return records;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace polytrope
