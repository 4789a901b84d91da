#include "trackcut/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace trackcut {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

long long to_int(std::string_view word, int line) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || end != word.data() + word.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
    int n = -1;
    long long m = -1;
    std::vector<Weight> weights;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    InstanceFile out;
    int line_no = 0;

    auto vertex = [&](std::string_view word, int line) {
        const long long v = to_int(word, line);
        if (v < 1 || v > n) {
            throw ParseError(line, "vertex " + std::string(word) + " out of range 1.." +
                                       std::to_string(n));
        }
        return static_cast<int>(v - 1);
    };
    auto arity = [](const std::vector<std::string_view>& words, std::size_t count, int line) {
        if (words.size() != count) {
            throw ParseError(line, "'" + std::string(words[0]) + "' expects " +
                                       std::to_string(count - 1) + " values");
        }
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto words = split_words(line);
        if (words.empty()) continue;
        const auto tag = words[0];

        if (tag == "c") {
            const auto body = line.find('c');
            std::string_view rest = line.substr(body + 1);
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
            while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.remove_suffix(1);
            out.comments.emplace_back(rest);
            continue;
        }
        if (n < 0) {
            if (tag != "g" || words.size() != 3) {
                throw ParseError(line_no, "malformed header; expected 'g <n> <m>'");
            }
            const long long nn = to_int(words[1], line_no);
            m = to_int(words[2], line_no);
            if (nn < 0 || m < 0 || nn > 10'000'000) {
                throw ParseError(line_no, "malformed header; n and m must be nonnegative");
            }
            n = static_cast<int>(nn);
            continue;
        }
        if (tag == "g") throw ParseError(line_no, "duplicate header");
        if (tag == "w") {
            if (!weights.empty()) throw ParseError(line_no, "duplicate weight line");
            if (words.size() != static_cast<std::size_t>(n) + 1) {
                throw ParseError(line_no, "weight line needs exactly " + std::to_string(n) + " values");
            }
            for (std::size_t i = 1; i < words.size(); ++i) {
                const long long w = to_int(words[i], line_no);
                if (w < 1) {
                    throw ParseError(line_no, "nonpositive weight " + std::string(words[i]) +
                                                  " for vertex " + std::to_string(i));
                }
                weights.push_back(w);
            }
        } else if (tag == "e") {
            arity(words, 3, line_no);
            const int u = vertex(words[1], line_no);
            const int v = vertex(words[2], line_no);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u + 1));
            if (!seen.insert(make_edge(u, v)).second) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u + 1) + " " +
                                              std::to_string(v + 1));
            }
            edges.push_back(make_edge(u, v));
        } else if (tag == "st") {
            arity(words, 3, line_no);
            if (out.st) throw ParseError(line_no, "duplicate 'st' line");
            const int s = vertex(words[1], line_no);
            const int t = vertex(words[2], line_no);
            if (s == t) throw ParseError(line_no, "source and target coincide");
            out.st = {s, t};
        } else if (tag == "r") {
            arity(words, 2, line_no);
            if (out.r) throw ParseError(line_no, "duplicate 'r' line");
            const long long r = to_int(words[1], line_no);
            if (r < 1 || r > 1'000'000) throw ParseError(line_no, "r must be a positive integer");
            out.r = static_cast<int>(r);
        } else if (tag == "pair") {
            arity(words, 3, line_no);
            const int s = vertex(words[1], line_no);
            const int t = vertex(words[2], line_no);
            if (s == t) throw ParseError(line_no, "terminal pair with identical endpoints");
            out.pairs.emplace_back(s, t);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing header 'g <n> <m>'");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    out.graph = WeightedGraph(n, std::move(edges), std::move(weights));
    return out;
}

std::string render_instance(const InstanceFile& inst) {
    std::ostringstream os;
    const auto& g = inst.graph;
    for (const auto& c : inst.comments) os << "c " << c << '\n';
    os << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    const bool unit = std::all_of(g.weights().begin(), g.weights().end(), [](Weight w) { return w == 1; });
    if (!unit) {
        os << 'w';
        for (Weight w : g.weights()) os << ' ' << w;
        os << '\n';
    }
    for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    if (inst.st) os << "st " << inst.st->first + 1 << ' ' << inst.st->second + 1 << '\n';
    if (inst.r) os << "r " << *inst.r << '\n';
    for (const auto& [s, t] : inst.pairs) os << "pair " << s + 1 << ' ' << t + 1 << '\n';
    return os.str();
}

}  // namespace trackcut
