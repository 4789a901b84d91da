#pragma once

#include "trackcut/errors.hpp"
#include "trackcut/graph.hpp"
#include "trackcut/multicut.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trackcut {

/// Text format, 1-indexed vertices:
///   g <n> <m>
///   w <w_1> ... <w_n>        optional, defaults to all ones
///   e <u> <v>                exactly m lines
///   st <s> <t>               optional
///   r <r>                    optional
///   pair <s> <t>             any number
///   c <free text>            comment, preserved verbatim
/// Blank lines are ignored.
struct InstanceFile {
    WeightedGraph graph;
    std::optional<std::pair<int, int>> st;  // 0-indexed
    std::optional<int> r;
    std::vector<TerminalPair> pairs;        // 0-indexed
    std::vector<std::string> comments;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

InstanceFile parse_instance(std::string_view text);
std::string render_instance(const InstanceFile& inst);

}  // namespace trackcut
