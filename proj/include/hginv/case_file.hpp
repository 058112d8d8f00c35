#pragma once
/// Case-file reader: a minimal TOML subset.  Each `[[case]]` table carries a
/// quoted `name`, integer arrays `q` and `d`, and an optional integer
/// `truncation` (series order for the ODE check, default 12).

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hginv {

struct CaseSpec {
    std::string name;
    std::vector<int> q;
    std::vector<int> d;
    int truncation = 12;
};

namespace detail {

inline std::string strip_comment_and_trim(const std::string& line) {
    std::string out;
    bool in_string = false;
    for (char c : line) {
        if (c == '"') in_string = !in_string;
        if (c == '#' && !in_string) break;
        out.push_back(c);
    }
    const auto first = out.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = out.find_last_not_of(" \t\r");
    return out.substr(first, last - first + 1);
}

inline std::invalid_argument case_file_error(int line_no, const std::string& message) {
    return std::invalid_argument("case file line " + std::to_string(line_no) + ": " + message);
}

inline int parse_int_token(const std::string& token, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw case_file_error(line_no, "expected an integer, got '" + token + "'");
    }
    if (pos != token.size())
        throw case_file_error(line_no, "trailing characters after integer in '" + token + "'");
    return value;
}

inline std::vector<int> parse_int_array(const std::string& value, int line_no) {
    if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw case_file_error(line_no, "expected an array like [1, 2, 3]");
    std::vector<int> out;
    std::stringstream body(value.substr(1, value.size() - 2));
    std::string token;
    while (std::getline(body, token, ',')) {
        std::string trimmed = strip_comment_and_trim(token);
        if (trimmed.empty()) throw case_file_error(line_no, "empty array element");
        out.push_back(parse_int_token(trimmed, line_no));
    }
    if (out.empty()) throw case_file_error(line_no, "array must be non-empty");
    return out;
}

inline std::string parse_quoted_string(const std::string& value, int line_no) {
    if (value.size() < 2 || value.front() != '"' || value.back() != '"')
        throw case_file_error(line_no, "expected a quoted string");
    std::string body = value.substr(1, value.size() - 2);
    if (body.find('"') != std::string::npos)
        throw case_file_error(line_no, "embedded quotes are not supported");
    return body;
}

inline void finish_case(const CaseSpec& spec, int line_no, std::vector<CaseSpec>& out) {
    if (spec.name.empty()) throw case_file_error(line_no, "case is missing 'name'");
    if (spec.q.empty()) throw case_file_error(line_no, "case is missing 'q'");
    if (spec.d.empty()) throw case_file_error(line_no, "case is missing 'd'");
    if (spec.truncation < 1) throw case_file_error(line_no, "'truncation' must be at least 1");
    out.push_back(spec);
}

}  // namespace detail

inline std::vector<CaseSpec> parse_case_file(std::istream& in) {
    std::vector<CaseSpec> cases;
    CaseSpec current;
    bool in_case = false;
    int line_no = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip_comment_and_trim(raw);
        if (line.empty()) continue;
        if (line == "[[case]]") {
            if (in_case) detail::finish_case(current, line_no, cases);
            current = CaseSpec{};
            in_case = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw detail::case_file_error(line_no, "expected 'key = value' or [[case]]");
        if (!in_case) throw detail::case_file_error(line_no, "entry before the first [[case]]");
        std::string key = detail::strip_comment_and_trim(line.substr(0, eq));
        std::string value = detail::strip_comment_and_trim(line.substr(eq + 1));
        if (key == "name")
            current.name = detail::parse_quoted_string(value, line_no);
        else if (key == "q")
            current.q = detail::parse_int_array(value, line_no);
        else if (key == "d")
            current.d = detail::parse_int_array(value, line_no);
        else if (key == "truncation")
            current.truncation = detail::parse_int_token(value, line_no);
        else
            throw detail::case_file_error(line_no, "unknown key '" + key + "'");
    }
    if (in_case) detail::finish_case(current, line_no, cases);
    if (cases.empty()) throw std::invalid_argument("case file contains no cases");
    return cases;
}

inline std::vector<CaseSpec> load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open case file: " + path);
    return parse_case_file(in);
}

}  // namespace hginv
