#include "lch/dga_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

namespace lch {

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;  // 1-based
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    throw Error(Errc::SyntaxError, os.str());
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) return std::nullopt;
    return value;
}

// Parses `text`, which starts at `column` of `line`, as a polynomial.
Polynomial parse_polynomial_at(std::string_view text, std::size_t line, std::size_t column) {
    auto trim = [](std::string_view s, std::size_t& col) {
        while (!s.empty() && is_space(s.front())) {
            s.remove_prefix(1);
            ++col;
        }
        while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
        return s;
    };
    std::size_t col = column;
    const auto body = trim(text, col);
    if (body.empty()) syntax_error(line, col, "missing polynomial");
    if (body == "0") return Polynomial::zero();

    Polynomial out;
    std::size_t pos = 0;
    while (true) {
        const auto plus = body.find('+', pos);
        const auto raw = body.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
        std::size_t term_col = col + pos;
        const auto term = trim(raw, term_col);
        if (term.empty()) syntax_error(line, term_col, "empty term");
        if (term == "1") {
            out.toggle(Word{});
        } else if (term == "0") {
            syntax_error(line, term_col, "'0' cannot appear inside a sum");
        } else {
            std::vector<std::string> factors;
            std::size_t fpos = 0;
            while (true) {
                const auto dot = term.find('.', fpos);
                const auto raw_factor =
                    term.substr(fpos, dot == std::string_view::npos ? std::string_view::npos : dot - fpos);
                std::size_t factor_col = term_col + fpos;
                const auto factor = trim(raw_factor, factor_col);
                if (factor.empty()) syntax_error(line, factor_col, "empty factor (expected an id between '.'s)");
                if (!is_valid_id(factor))
                    syntax_error(line, factor_col, "invalid generator id '" + std::string(factor) + "'");
                factors.emplace_back(factor);
                if (dot == std::string_view::npos) break;
                fpos = dot + 1;
            }
            out.toggle(Word(std::move(factors)));
        }
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return parse_polynomial_at(text, 1, 1); }

DgaPresentation parse_dga(std::string_view text) {
    std::vector<Generator> gens;
    std::map<std::string, std::size_t> declared_at;
    std::map<std::string, Polynomial> diffs;
    std::map<std::string, std::size_t> diff_at;
    std::optional<std::string> name;

    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::size_t lineno = n + 1;
        const auto line = strip_comment(lines[n]);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto& head = tokens[0];
        if (head.text == "dga") {
            if (tokens.size() != 2) syntax_error(lineno, head.column, "expected 'dga <name>'");
            if (name) syntax_error(lineno, head.column, "second 'dga' header");
            name = std::string(tokens[1].text);
        } else if (head.text == "gen") {
            if (tokens.size() != 3) syntax_error(lineno, head.column, "expected 'gen <id> <degree>'");
            const auto id = tokens[1].text;
            if (!is_valid_id(id)) syntax_error(lineno, tokens[1].column, "invalid generator id '" + std::string(id) + "'");
            const auto degree = parse_int(tokens[2].text);
            if (!degree) syntax_error(lineno, tokens[2].column, "degree must be an integer");
            if (auto [it, fresh] = declared_at.emplace(std::string(id), lineno); !fresh) {
                std::ostringstream msg;
                msg << "line " << lineno << ": '" << id << "' already declared on line " << it->second;
                throw Error(Errc::DuplicateId, msg.str());
            }
            gens.push_back({std::string(id), *degree});
        } else if (head.text == "diff") {
            const std::size_t rest_start = head.column - 1 + head.text.size();
            const auto rest = line.substr(rest_start);
            const auto eq = rest.find('=');
            if (eq == std::string_view::npos) syntax_error(lineno, head.column, "expected 'diff <id> = <poly>'");
            const auto lhs = tokenize(rest.substr(0, eq));
            if (lhs.size() != 1) syntax_error(lineno, rest_start + 1, "expected exactly one id before '='");
            const auto id = lhs[0].text;
            const std::size_t id_col = rest_start + lhs[0].column;
            if (!is_valid_id(id)) syntax_error(lineno, id_col, "invalid generator id '" + std::string(id) + "'");
            if (auto [it, fresh] = diff_at.emplace(std::string(id), lineno); !fresh)
                syntax_error(lineno, id_col,
                             "second differential for '" + std::string(id) + "' (first on line " +
                                 std::to_string(it->second) + ")");
            diffs[std::string(id)] = parse_polynomial_at(rest.substr(eq + 1), lineno, rest_start + eq + 2);
        } else {
            syntax_error(lineno, head.column, "unknown directive '" + std::string(head.text) + "'");
        }
    }
    for (const auto& [id, at] : diff_at)
        if (!declared_at.count(id)) {
            std::ostringstream msg;
            msg << "line " << at << ": differential given for undeclared '" << id << "'";
            throw Error(Errc::UnknownGenerator, msg.str());
        }
    auto p = build_presentation(gens, diffs);
    if (name) p.set_name(*name);
    return p;
}

std::string serialize(const DgaPresentation& p) {
    std::ostringstream os;
    if (!p.name().empty()) os << "dga " << p.name() << '\n';
    for (const auto& g : p.generators()) os << "gen " << g.id << ' ' << g.degree << '\n';
    for (const auto& g : p.generators()) os << "diff " << g.id << " = " << to_string(p.differential(g.id)) << '\n';
    return os.str();
}

ClassMap parse_classes(std::string_view text) {
    ClassMap out;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto tokens = tokenize(strip_comment(lines[n]));
        if (tokens.empty()) continue;
        if (tokens.size() != 2) syntax_error(n + 1, tokens[0].column, "expected '<id> <class>'");
        if (!is_valid_id(tokens[0].text))
            syntax_error(n + 1, tokens[0].column, "invalid generator id '" + std::string(tokens[0].text) + "'");
        const auto cls = parse_class_name(tokens[1].text);
        if (!cls) syntax_error(n + 1, tokens[1].column, "unknown class '" + std::string(tokens[1].text) + "'");
        if (!out.emplace(std::string(tokens[0].text), *cls).second)
            syntax_error(n + 1, tokens[0].column, "'" + std::string(tokens[0].text) + "' classified twice");
    }
    return out;
}

PathTable parse_path_table(std::string_view text) {
    PathTable out;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto tokens = tokenize(strip_comment(lines[n]));
        if (tokens.empty()) continue;
        auto integer = [&](std::size_t i) {
            const auto v = parse_int(tokens[i].text);
            if (!v) syntax_error(n + 1, tokens[i].column, "expected an integer");
            return *v;
        };
        if (tokens[0].text == "endpoints") {
            if (tokens.size() != 4) syntax_error(n + 1, tokens[0].column, "expected 'endpoints <id> <i-> <i+>'");
            out.endpoints[std::string(tokens[1].text)] = {integer(2), integer(3)};
        } else if (tokens[0].text == "pair") {
            if (tokens.size() != 10)
                syntax_error(n + 1, tokens[0].column,
                             "expected 'pair <i-> <i+> <d+> <u+> <d-> <u-> <morse> <ambient> forward|reverse'");
            ComponentPair pair{integer(3), integer(4), integer(5), integer(6), integer(7), integer(8),
                               ChordOrientation::Forward};
            if (tokens[9].text == "reverse") pair.orientation = ChordOrientation::Reverse;
            else if (tokens[9].text != "forward") syntax_error(n + 1, tokens[9].column, "expected forward or reverse");
            out.pairs.set(integer(1), integer(2), pair);
        } else {
            syntax_error(n + 1, tokens[0].column, "unknown directive '" + std::string(tokens[0].text) + "'");
        }
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidBundle, "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::InvalidBundle, "cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw Error(Errc::InvalidBundle, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(Errc::InvalidBundle, "cannot replace " + path.string());
    }
}

}  // namespace lch
