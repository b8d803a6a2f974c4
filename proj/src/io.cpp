#include "mopkit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace mopkit {

using nlohmann::json;

InstanceParseError::InstanceParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

std::string to_json_line(const Mop& m)
{
    json diagonals = json::array();
    for (Edge d : m.diagonals()) diagonals.push_back({d.u, d.v});
    return json{{"n", m.order()}, {"diagonals", std::move(diagonals)}}.dump();
}

Mop parse_instance(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("instance must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw std::invalid_argument("field \"n\" must be an integer");
    }
    if (!doc.contains("diagonals") || !doc["diagonals"].is_array()) {
        throw std::invalid_argument("field \"diagonals\" must be an array");
    }
    std::vector<Edge> diagonals;
    for (const json& pair : doc["diagonals"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw std::invalid_argument("each diagonal must be a pair of integers");
        }
        diagonals.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Mop::make(doc["n"].get<int>(), std::move(diagonals));
}

std::vector<InstanceLine> scan_instances(std::istream& in)
{
    std::vector<InstanceLine> out;
    std::string text;
    for (int line = 1; std::getline(in, text); ++line) {
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        InstanceLine entry{line, std::nullopt, {}};
        try {
            entry.mop = parse_instance(text);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<Mop> read_instances(std::istream& in)
{
    std::vector<Mop> out;
    for (InstanceLine& entry : scan_instances(in)) {
        if (!entry.mop) throw InstanceParseError(entry.line, entry.error);
        out.push_back(std::move(*entry.mop));
    }
    return out;
}

std::vector<Mop> read_instances(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_instances(in);
}

void write_instances(std::ostream& out, std::span<const Mop> mops)
{
    for (const Mop& m : mops) out << to_json_line(m) << '\n';
}

void write_instances(const std::filesystem::path& path, std::span<const Mop> mops)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_instances(out, mops);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mopkit
