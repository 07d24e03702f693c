#include "universo/graph6.hpp"
#include "universo/errors.hpp"

#include <filesystem>
#include <fstream>

namespace universo {

namespace {

constexpr int kBias = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j])
                v |= 1;
        }
        out.push_back(static_cast<char>(v + kBias));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 258047)
        throw parameter_error("graph6: vertex count beyond supported range");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(std::string_view text, std::string name) {
    // strip optional header and surrounding whitespace
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty())
        throw parameter_error("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw parameter_error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126)
            throw parameter_error("graph6: invalid character");
        return c - kBias;
    };

    long long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        int a = next();
        if (a == 63)
            throw parameter_error("graph6: vertex count beyond supported range");
        int b = next(), c = next();
        n = (static_cast<long long>(a) << 12) | (b << 6) | c;
    }
    if (n > 258047)
        throw parameter_error("graph6: vertex count beyond supported range");

    std::vector<std::pair<int, int>> edges;
    int buf = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                buf = next();
                have = 6;
            }
            --have;
            if ((buf >> have) & 1)
                edges.emplace_back(i, j);
        }
    }
    if (pos != text.size())
        throw parameter_error("graph6: trailing data");
    return Graph(static_cast<int>(n), std::move(edges), std::move(name));
}

Graph read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parameter_error("cannot open graph6 file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        // skip blanks, take the first graph line
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank)
            return from_graph6(line, std::filesystem::path(path).stem().string());
    }
    throw parameter_error("graph6 file has no graph line: " + path);
}

void write_graph6_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw parameter_error("cannot write graph6 file: " + path);
    out << to_graph6(g) << '\n';
}

} // namespace universo
