#include <istream>
#include <ostream>
#include <sstream>

#include "delsub/codes.hpp"

namespace delsub {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view key, std::string_view text) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
    }
}

void assign(CodeSpec& spec, bool& have_family, bool& have_n, std::string_view key, std::string_view value) {
    if (key == "family") {
        spec.family = parse_family(value);
        have_family = true;
    } else if (key == "n") {
        spec.n = static_cast<int>(parse_int(key, value));
        have_n = true;
    } else if (key == "a") spec.params.a = parse_int(key, value);
    else if (key == "m") spec.params.m = parse_int(key, value);
    else if (key == "P") spec.params.P = parse_int(key, value);
    else if (key == "a0") spec.params.a0 = parse_int(key, value);
    else if (key == "a1") spec.params.a1 = parse_int(key, value);
    else if (key == "a2") spec.params.a2 = parse_int(key, value);
    else throw Error(ErrorCode::ParseError, "unknown code parameter '" + std::string(key) + "'");
}

void assign_list(CodeSpec& spec, bool& have_family, bool& have_n, std::string_view list) {
    while (!list.empty()) {
        const std::size_t comma = list.find(',');
        const std::string_view item = trim(list.substr(0, comma));
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
        assign(spec, have_family, have_n, trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    }
}

}  // namespace

std::string format_code_header(const CodeSpec& spec) { return "# " + spec.describe(); }

CodeSpec parse_code_spec(std::string_view text) {
    CodeSpec spec;
    bool have_family = false;
    bool have_n = false;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const std::string_view t = token;
        if (t.starts_with("params=")) assign_list(spec, have_family, have_n, t.substr(7));
        else assign_list(spec, have_family, have_n, t);
    }
    if (!have_family) throw Error(ErrorCode::ParseError, "code description lacks family=");
    if (!have_n) throw Error(ErrorCode::ParseError, "code description lacks n=");
    spec.validate();
    return spec;
}

CodeSpec parse_code_header(std::string_view line) {
    line = trim(line);
    if (!line.starts_with('#')) throw Error(ErrorCode::ParseError, "code file header must start with '#'");
    return parse_code_spec(line.substr(1));
}

void write_code_file(std::ostream& os, const CodeSpec& spec) {
    os << format_code_header(spec) << '\n';
    enumerate(spec, [&](const Word& x) { os << x.str() << '\n'; });
}

CodeFile read_code_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "empty code file");
    CodeFile file;
    file.spec = parse_code_header(line);
    while (std::getline(is, line)) {
        const std::string_view t = trim(line);
        if (t.empty()) continue;
        Word w = Word::parse(t);
        if (w.size() != file.spec.n)
            throw Error(ErrorCode::LengthMismatch, "code file word '" + std::string(t) + "' has wrong length");
        if (!file.words.empty() && !(file.words.back() < w))
            throw Error(ErrorCode::ParseError, "code file words are not strictly ascending");
        file.words.push_back(w);
    }
    return file;
}

}  // namespace delsub
