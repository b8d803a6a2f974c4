#pragma once

// JSONL instance files: one {"n": <int>, "diagonals": [[i, j], ...]} object per line.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mopkit/mop.hpp"

namespace mopkit {

class InstanceParseError : public std::runtime_error
{
public:
    InstanceParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Single-line JSON with diagonals as [i, j], i < j, sorted.
std::string to_json_line(const Mop& m);

/// Parses and validates one JSON object. Throws std::invalid_argument for
/// structural problems and InvalidMop for mop invariant violations.
Mop parse_instance(std::string_view text);

struct InstanceLine
{
    int line = 0;  // 1-based
    std::optional<Mop> mop;
    std::string error;  // set when mop is empty
};

/// Reads every non-blank line, keeping going past bad ones.
std::vector<InstanceLine> scan_instances(std::istream& in);

/// Strict readers: the first bad line throws InstanceParseError.
std::vector<Mop> read_instances(std::istream& in);
/// Also throws std::runtime_error when the file cannot be opened.
std::vector<Mop> read_instances(const std::filesystem::path& path);

void write_instances(std::ostream& out, std::span<const Mop> mops);
void write_instances(const std::filesystem::path& path, std::span<const Mop> mops);

}  // namespace mopkit
