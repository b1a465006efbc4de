#include "pte/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pte {

namespace {

std::string strip_ws(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char c : in)
        if (!std::isspace((unsigned char)c)) out += c;
    return out;
}

std::vector<GaussianInt> parse_element_list(std::string_view body, std::string_view line) {
    std::vector<GaussianInt> out;
    size_t pos = 0;
    while (pos < body.size()) {
        out.push_back(parse_gaussian_prefix(body, pos));
        if (pos < body.size()) {
            if (body[pos] != ',')
                throw std::invalid_argument("expected ',' between elements in '" +
                                            std::string(line) + "'");
            ++pos;
            if (pos == body.size())
                throw std::invalid_argument("trailing ',' in '" + std::string(line) + "'");
        }
    }
    return out;
}

}  // namespace

PteSolution parse_solution_line(std::string_view raw) {
    std::string line = strip_ws(raw);
    if (line.empty()) throw std::invalid_argument("empty solution line");
    long n = -1, k = -1;
    std::vector<GaussianInt> x, y;
    bool have_x = false, have_y = false;

    size_t pos = 0;
    while (pos < line.size()) {
        size_t end = line.find(';', pos);
        std::string_view seg = std::string_view(line).substr(
            pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? line.size() : end + 1;
        if (seg.empty()) continue;
        size_t eq = seg.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value segment in '" + line + "'");
        std::string_view key = seg.substr(0, eq), val = seg.substr(eq + 1);
        if (key == "n" || key == "k") {
            long v = 0;
            try {
                size_t used = 0;
                v = std::stol(std::string(val), &used);
                if (used != val.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer for '" + std::string(key) + "' in '" +
                                            line + "'");
            }
            (key == "n" ? n : k) = v;
        } else if (key == "X") {
            x = parse_element_list(val, line);
            have_x = true;
        } else if (key == "Y") {
            y = parse_element_list(val, line);
            have_y = true;
        } else {
            throw std::invalid_argument("unknown key '" + std::string(key) + "' in '" + line +
                                        "'");
        }
    }
    if (n < 0 || !have_x || !have_y)
        throw std::invalid_argument("solution line needs n=, X=, Y=: '" + line + "'");
    if ((long)x.size() != n || (long)y.size() != n)
        throw std::invalid_argument("size mismatch: n=" + std::to_string(n) + " but |X|=" +
                                    std::to_string(x.size()) + ", |Y|=" +
                                    std::to_string(y.size()));
    int degree = k < 0 ? (int)n - 1 : (int)k;
    return PteSolution(std::move(x), std::move(y), degree);
}

std::vector<PteSolution> parse_solutions(std::string_view text) {
    std::vector<PteSolution> out;
    size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;
        std::string stripped = strip_ws(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        try {
            out.push_back(parse_solution_line(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string emit_solution(const PteSolution& s) {
    std::ostringstream os;
    os << "n=" << s.size() << ";";
    if (s.claimed_degree() != s.size() - 1) os << " k=" << s.claimed_degree() << ";";
    os << " X=";
    for (size_t i = 0; i < s.x().size(); ++i) {
        if (i) os << ",";
        os << s.x()[i].to_string();
    }
    os << "; Y=";
    for (size_t i = 0; i < s.y().size(); ++i) {
        if (i) os << ",";
        os << s.y()[i].to_string();
    }
    return os.str();
}

std::string emit_solutions(const std::vector<PteSolution>& list) {
    std::vector<std::pair<int, std::string>> lines;
    lines.reserve(list.size());
    for (const auto& s : list) lines.emplace_back(s.size(), emit_solution(s));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& [n, line] : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string format_factored(const GFactorization& f) { return f.to_string(); }

GFactorization parse_factored(std::string_view raw) {
    std::string text = strip_ws(raw);
    GFactorization f;
    if (text == "1") return f;
    if (!text.empty() && text[0] == '-') {
        f.unit = GaussianInt(-1, 0);
        text = text.substr(1);
    }
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '*')
                throw std::invalid_argument("expected '*' in factored form '" + text + "'");
            ++pos;
        }
        GaussianInt base = parse_gaussian_prefix(text, pos);
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (start == pos)
                throw std::invalid_argument("missing exponent in factored form '" + text + "'");
            exp = std::stoi(text.substr(start, pos - start));
        }
        if (base.is_unit()) {
            if (exp != 1)
                throw std::invalid_argument("unit with exponent in factored form '" + text + "'");
            f.unit = f.unit * base;
        } else {
            if (!is_canonical(base))
                throw std::invalid_argument("non-canonical prime " + base.to_string() +
                                            " in factored form");
            GFactorization check = factor(base);
            if (check.factors.size() != 1 || check.factors[0].second != 1)
                throw std::invalid_argument("composite base " + base.to_string() +
                                            " in factored form");
            gfact_mul_prime(f, base, exp);
        }
        first = false;
    }
    return f;
}

}  // namespace pte
