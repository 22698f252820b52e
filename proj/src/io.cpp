#include "hypertoric/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hypertoric {

namespace {

[[noreturn]] void bad(const std::string& src, std::size_t line, const std::string& msg) {
    throw error(errc::invalid_input, src + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

IntMatrix parse_matrix_json(const std::string& text, const std::string& src) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw error(errc::invalid_input, src + ": " + e.what());
    }
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw error(errc::invalid_input, src + ": expected a \"rows\" array");
    const auto& rows = doc["rows"];
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw error(errc::invalid_input, src + ": ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < c; ++j) {
            const auto& cell = rows[i][j];
            if (!cell.is_number_integer())
                throw error(errc::invalid_input, src + ": non-integer entry at (" +
                                                     std::to_string(i) + "," + std::to_string(j) + ")");
            m(i, j) = Int(cell.get<long long>());
        }
    }
    return m;
}

} // namespace

IntMatrix parse_matrix_text(const std::string& text, const std::string& src) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text, src);

    auto lines = content_lines(text);
    if (lines.empty()) throw error(errc::invalid_input, src + ": empty matrix file");
    std::istringstream head(lines[0].second);
    long long r = -1, c = -1;
    if (!(head >> r >> c) || r < 0 || c < 0) bad(src, lines[0].first, "expected header \"rows cols\"");
    std::string extra;
    if (head >> extra) bad(src, lines[0].first, "trailing tokens after header");
    if (lines.size() != std::size_t(r) + 1)
        bad(src, lines[0].first,
            "expected " + std::to_string(r) + " data rows, found " + std::to_string(lines.size() - 1));
    IntMatrix m{std::size_t(r), std::size_t(c)};
    for (long long i = 0; i < r; ++i) {
        std::istringstream row(lines[std::size_t(i) + 1].second);
        for (long long j = 0; j < c; ++j) {
            std::string tok;
            if (!(row >> tok))
                bad(src, lines[std::size_t(i) + 1].first,
                    "row has fewer than " + std::to_string(c) + " entries");
            try {
                m(std::size_t(i), std::size_t(j)) = Int(tok);
            } catch (const std::exception&) {
                bad(src, lines[std::size_t(i) + 1].first, "bad integer '" + tok + "'");
            }
        }
        std::string tok;
        if (row >> tok) bad(src, lines[std::size_t(i) + 1].first, "row has extra entries");
    }
    return m;
}

std::string format_matrix_file(const IntMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    s += m.to_string();
    return s;
}

Graph parse_graph_text(const std::string& text, const std::string& src) {
    auto lines = content_lines(text);
    std::vector<std::pair<int, int>> edges;
    long long maxv = -1;
    for (const auto& [no, line] : lines) {
        std::istringstream in(line);
        long long u, v;
        if (!(in >> u >> v)) bad(src, no, "expected an edge \"u v\"");
        std::string extra;
        if (in >> extra) bad(src, no, "trailing tokens after edge");
        if (u < 0 || v < 0) bad(src, no, "negative vertex label");
        if (u == v) bad(src, no, "self-loop " + std::to_string(u));
        edges.emplace_back(int(u), int(v));
        maxv = std::max({maxv, u, v});
    }
    return Graph(std::size_t(maxv + 1), std::move(edges));
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_input, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

IntMatrix read_matrix_file(const std::string& path) { return parse_matrix_text(slurp(path), path); }
Graph read_graph_file(const std::string& path) { return parse_graph_text(slurp(path), path); }

} // namespace hypertoric
